#include "dcalg/json_io.hpp"

#include <json.hpp>

namespace dcalg {

using nlohmann::ordered_json;

namespace {

ordered_json rational_json(const Rational& q) {
    return ordered_json{{"num", num_str(q)}, {"den", den_str(q)}};
}

ordered_json header_json(const Family& fam) {
    ordered_json j;
    j["family"] = family_name(fam.kind());
    j["n"] = fam.n();
    if (fam.kind() == FamilyKind::GLCenter) j["q"] = fam.q();
    return j;
}

}  // namespace

std::string decomposition_json(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                               const std::map<ClassLabel, Rational>& coefficients) {
    ordered_json j = header_json(fam);
    j["left"] = label_str(l1);
    j["right"] = label_str(l2);
    j["coefficients"] = ordered_json::array();
    for (const auto& [label, c] : coefficients) {
        ordered_json item;
        item["label"] = label_str(label);
        item["num"] = num_str(c);
        item["den"] = den_str(c);
        j["coefficients"].push_back(item);
    }
    return j.dump(2);
}

std::string decomposition_csv(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                              const std::map<ClassLabel, Rational>& coefficients) {
    std::string s = "family,n,left,right,label,coefficient\n";
    for (const auto& [label, c] : coefficients) {
        s += family_name(fam.kind()) + "," + std::to_string(fam.n()) + "," + label_str(l1) + "," +
             label_str(l2) + "," + label_str(label) + "," + rational_str(c) + "\n";
    }
    return s;
}

std::string hypothesis_report_json(const std::vector<HypothesisReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["hypothesis"] = hypothesis_name(r.hypothesis);
        j["family"] = family_name(r.family);
        if (r.q) j["q"] = r.q;
        j["cells_checked"] = r.checked.size();
        j["verdict"] = r.pass ? "pass" : "fail";
        if (r.witness) {
            ordered_json w;
            w["description"] = r.witness->description;
            w["elements"] = r.witness->elements;
            j["witness"] = w;
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string breakdown_json(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                           const ClassLabel& l3, const CoefficientBreakdown& bd,
                           const Rational* brute) {
    ordered_json j = header_json(fam);
    j["left"] = label_str(l1);
    j["right"] = label_str(l2);
    j["target"] = label_str(l3);
    j["k"] = {bd.k1, bd.k2, bd.k3};
    j["eval_level"] = bd.eval_level;
    j["prefactor"] = rational_json(bd.prefactor);
    j["total"] = rational_json(bd.total);
    ordered_json terms = ordered_json::array();
    for (const auto& t : bd.terms) {
        ordered_json tj;
        tj["k"] = t.k;
        tj["m"] = t.m;
        tj["x"] = element_str(t.x);
        tj["intersection"] = t.intersection;
        tj["contribution"] = rational_json(t.contribution);
        terms.push_back(tj);
    }
    j["terms"] = terms;
    if (brute) {
        j["bruteforce"] = rational_json(*brute);
        j["match"] = (*brute == bd.total);
    }
    return j.dump(2);
}

std::string certificate_json(const PolyCertificate& cert) {
    ordered_json j;
    j["family"] = family_name(cert.family);
    j["left"] = cert.left;
    j["right"] = cert.right;
    j["target"] = cert.target;
    j["normalization"] = cert.normalization;
    j["degree_bound"] = cert.degree_bound;
    j["nonnegative_required"] = cert.nonneg_required;
    ordered_json coef = ordered_json::array();
    for (const auto& c : cert.poly.coefficients()) coef.push_back(rational_json(c));
    j["polynomial"] = {{"coefficients_ascending", coef}, {"text", cert.poly.str()}};
    auto points_json = [](const std::vector<std::pair<int, Rational>>& pts) {
        ordered_json arr = ordered_json::array();
        for (const auto& [n, v] : pts)
            arr.push_back(ordered_json{{"n", n}, {"value", rational_json(v)}});
        return arr;
    };
    j["fit_points"] = points_json(cert.fit_points);
    j["holdout_points"] = points_json(cert.holdout_points);
    j["verdict"] = cert.pass ? "pass" : "fail";
    if (!cert.note.empty()) j["note"] = cert.note;
    return j.dump(2);
}

}  // namespace dcalg
