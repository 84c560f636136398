#include "dcalg/acceptance.hpp"
#include "dcalg/formal_sum.hpp"
#include "dcalg/hypotheses.hpp"
#include "dcalg/json_io.hpp"
#include "dcalg/polynomiality.hpp"
#include "dcalg/structure_formula.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace dcalg;

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DCALG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output path: " + out_path);
    out << text << "\n";
}

// "a..b" -> [a, b]
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct CommonFlags {
    std::string family;
    int n = 0;
    int q = 0;
    int threads = 0;
    long long max_elements = 10'000'000;
};

std::shared_ptr<const Family> make_family(const CommonFlags& f) {
    set_element_guard(f.max_elements);
    return Family::make(family_from_name(f.family), f.n, f.q);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure coefficients for double-class algebras and group-algebra "
                 "centers of classical group towers"};
    app.require_subcommand(1);

    // ---- compute ----
    CommonFlags cf;
    std::string left, right, target, format = "json", out_path;
    auto* compute = app.add_subcommand("compute", "decompose a product of two class sums");
    compute->add_option("--family", cf.family, "center-sym|center-hyp|hecke|diag-pair|gl")
        ->required();
    compute->add_option("--n", cf.n, "tower level")->required();
    compute->add_option("--q", cf.q, "field order (gl only)");
    compute->add_option("--left", left, "left class label")->required();
    compute->add_option("--right", right, "right class label")->required();
    compute->add_option("--target", target, "optional single target label");
    compute->add_option("--format", format, "json|csv");
    compute->add_option("--out", out_path, "output path (default stdout)");
    compute->add_option("--threads", cf.threads, "worker threads (or DCALG_THREADS)");
    compute->add_option("--max-elements", cf.max_elements, "enumeration guard");

    // ---- verify-hypotheses ----
    CommonFlags hf;
    std::string hypothesis = "all";
    int n_max = 3, k_max = 3;
    auto* verify_h = app.add_subcommand("verify-hypotheses", "run the tower axiom checkers");
    verify_h->add_option("--family", hf.family, "family name")->required();
    verify_h->add_option("--n-max", n_max, "largest tower level")->required();
    verify_h->add_option("--k-max", k_max, "largest subgroup index (default 3)");
    verify_h->add_option("--q", hf.q, "field order (gl only)");
    verify_h->add_option("--hypothesis", hypothesis, "H0|H1|H2|H3|H'3|H4|H5|H'0|all");
    verify_h->add_option("--out", out_path, "output path (default stdout)");
    verify_h->add_option("--max-elements", hf.max_elements, "enumeration guard");

    // ---- verify-theorem ----
    CommonFlags tf;
    std::string t_left, t_right, t_target;
    bool breakdown = false;
    auto* verify_t = app.add_subcommand(
        "verify-theorem", "compare the closed-form coefficient against brute force");
    verify_t->add_option("--family", tf.family, "family name")->required();
    verify_t->add_option("--n", tf.n, "tower level")->required();
    verify_t->add_option("--q", tf.q, "field order (gl only)");
    verify_t->add_option("--left", t_left, "left class label")->required();
    verify_t->add_option("--right", t_right, "right class label")->required();
    verify_t->add_option("--target", t_target, "target class label")->required();
    verify_t->add_flag("--breakdown", breakdown, "emit the per-summand breakdown");
    verify_t->add_option("--threads", tf.threads, "worker threads (or DCALG_THREADS)");
    verify_t->add_option("--out", out_path, "output path (default stdout)");
    verify_t->add_option("--max-elements", tf.max_elements, "enumeration guard");

    // ---- polyfit ----
    CommonFlags pf;
    std::string p_left, p_right, p_target, fit_range, holdout_range;
    auto* polyfit = app.add_subcommand("polyfit", "fit and certify a coefficient polynomial");
    polyfit->add_option("--family", pf.family, "family name")->required();
    polyfit->add_option("--left", p_left, "left proper label")->required();
    polyfit->add_option("--right", p_right, "right proper label")->required();
    polyfit->add_option("--target", p_target, "target proper label")->required();
    polyfit->add_option("--n", fit_range, "fit range a..b")->required();
    polyfit->add_option("--holdout", holdout_range, "holdout range c..d")->required();
    polyfit->add_option("--threads", pf.threads, "worker threads (or DCALG_THREADS)");
    polyfit->add_option("--out", out_path, "output path (default stdout)");
    polyfit->add_option("--max-elements", pf.max_elements, "enumeration guard");

    // ---- selftest ----
    bool quick = false;
    int st_threads = 0;
    std::string only;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_flag("--quick", quick, "trimmed ranges for smoke runs");
    selftest->add_option("--criterion", only, "run a single criterion id");
    selftest->add_option("--threads", st_threads, "worker threads (or DCALG_THREADS)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            auto fam = make_family(cf);
            ClassLabel l1 = fam->pad_label(parse_label(left, cf.q, cf.n));
            ClassLabel l2 = fam->pad_label(parse_label(right, cf.q, cf.n));
            int threads = thread_count(cf.threads);
            if (!target.empty()) {
                ClassLabel l3 = fam->pad_label(parse_label(target, cf.q, cf.n));
                Rational v = structure_coefficient_bruteforce(fam, l1, l2, l3, threads);
                std::map<ClassLabel, Rational> single{{l3, v}};
                emit(format == "csv" ? decomposition_csv(*fam, l1, l2, single)
                                     : decomposition_json(*fam, l1, l2, single),
                     out_path);
            } else {
                auto coeffs = product_decomposition(fam, l1, l2, threads);
                emit(format == "csv" ? decomposition_csv(*fam, l1, l2, coeffs)
                                     : decomposition_json(*fam, l1, l2, coeffs),
                     out_path);
            }
            return 0;
        }
        if (*verify_h) {
            set_element_guard(hf.max_elements);
            FamilyKind kind = family_from_name(hf.family);
            std::vector<HypothesisReport> reports;
            if (hypothesis == "all") {
                reports = check_all_hypotheses(kind, n_max, k_max, hf.q);
            } else {
                reports.push_back(
                    check_hypothesis(kind, hypothesis_from_name(hypothesis), 1, n_max, k_max, hf.q));
            }
            emit(hypothesis_report_json(reports), out_path);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }
        if (*verify_t) {
            auto fam = make_family(tf);
            ClassLabel l1 = fam->pad_label(parse_label(t_left, tf.q, tf.n));
            ClassLabel l2 = fam->pad_label(parse_label(t_right, tf.q, tf.n));
            ClassLabel l3 = fam->pad_label(parse_label(t_target, tf.q, tf.n));
            auto bd = coefficient_via_theorem(fam, l1, l2, l3);
            Rational brute =
                structure_coefficient_bruteforce(fam, l1, l2, l3, thread_count(tf.threads));
            CoefficientBreakdown trimmed = bd;
            if (!breakdown) trimmed.terms.clear();
            emit(breakdown_json(*fam, l1, l2, l3, trimmed, &brute), out_path);
            return bd.total == brute ? 0 : 1;
        }
        if (*polyfit) {
            set_element_guard(pf.max_elements);
            FamilyKind kind = family_from_name(pf.family);
            ClassLabel l1 = parse_label(p_left, pf.q, pf.n);
            ClassLabel l2 = parse_label(p_right, pf.q, pf.n);
            ClassLabel l3 = parse_label(p_target, pf.q, pf.n);
            auto [fit_lo, fit_hi] = parse_range(fit_range);
            auto [hold_lo, hold_hi] = parse_range(holdout_range);
            int bound = corollary_degree_bound(kind, l1, l2, l3);
            auto cert = verify_polynomiality(kind, l1, l2, l3, bound, fit_lo, fit_hi, hold_lo,
                                             hold_hi, SeriesSource::Auto, thread_count(pf.threads));
            emit(certificate_json(cert), out_path);
            return cert.pass ? 0 : 1;
        }
        if (*selftest) {
            int threads = thread_count(st_threads);
            if (!only.empty()) {
                auto r = run_acceptance_criterion(only, quick, threads);
                std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << "\n";
                for (const auto& line : r.lines) std::cout << line << "\n";
                return r.pass ? 0 : 1;
            }
            return run_acceptance_suite(quick, threads) == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
