#include "dcalg/fq.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dcalg {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Decompose q = p^e; returns {p, e} or throws.
std::pair<int, int> prime_power(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p) continue;
        int e = 0, m = q;
        while (m % p == 0) { m /= p; ++e; }
        if (m != 1) throw std::invalid_argument("field order must be a prime power");
        return {p, e};
    }
    throw std::invalid_argument("field order must be a prime power");
}

// Multiply polynomials over F_p reduced mod the monic polynomial `mod`
// (encoded low-degree-first, without the leading 1, length e).
int poly_mul(int a, int b, int p, int e, const std::vector<int>& mod) {
    std::vector<int> av(e), bv(e), prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) { av[i] = a % p; a /= p; bv[i] = b % p; b /= p; }
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p;
    for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p * p) % p;
    }
    int r = 0;
    for (int i = e - 1; i >= 0; --i) r = r * p + prod[i];
    return r;
}

}  // namespace

Field::Field(int q) : q_(q), add_(q * q), mul_(q * q), neg_(q), inv_(q, -1) {
    auto [p, e] = prime_power(q);
    std::vector<int> mod;  // reduction polynomial coefficients (absent for e = 1)
    if (e > 1) {
        // Search for a monic irreducible polynomial x^e + c_{e-1}x^{e-1} + ... + c_0
        // by testing that it has no root-free factorization via brute force over
        // all monic divisors; at these sizes trial multiplication is enough.
        int total = 1;
        for (int i = 0; i < e; ++i) total *= p;
        for (int code = 0; code < total && mod.empty(); ++code) {
            std::vector<int> cand(e);
            int c = code;
            for (int i = 0; i < e; ++i) { cand[i] = c % p; c /= p; }
            // irreducible iff no monic factor of degree 1..e/2 divides it;
            // test by checking no product of two smaller monics equals it
            auto eval_times = [&](int da, const std::vector<int>& fa, int db, const std::vector<int>& fb) {
                std::vector<int> prod(da + db + 1, 0);
                for (int i = 0; i <= da; ++i)
                    for (int j = 0; j <= db; ++j)
                        prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
                return prod;
            };
            bool reducible = false;
            // enumerate monic factors of degree d, 1 <= d <= e-1, with monic cofactor
            for (int d = 1; d <= e / 2 && !reducible; ++d) {
                int fd = 1;
                for (int i = 0; i < d; ++i) fd *= p;
                int gd = 1;
                for (int i = 0; i < e - d; ++i) gd *= p;
                for (int fc = 0; fc < fd && !reducible; ++fc) {
                    std::vector<int> fa(d + 1, 1);
                    int t = fc;
                    for (int i = 0; i < d; ++i) { fa[i] = t % p; t /= p; }
                    for (int gc = 0; gc < gd && !reducible; ++gc) {
                        std::vector<int> fb(e - d + 1, 1);
                        int u = gc;
                        for (int i = 0; i < e - d; ++i) { fb[i] = u % p; u /= p; }
                        auto prod = eval_times(d, fa, e - d, fb);
                        bool same = true;
                        for (int i = 0; i < e && same; ++i) same = prod[i] == cand[i];
                        if (same) reducible = true;
                    }
                }
            }
            if (!reducible) mod = cand;
        }
        if (mod.empty()) throw std::logic_error("no irreducible polynomial found");
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (e == 1) {
                add_[a * q + b] = (a + b) % p;
                mul_[a * q + b] = (a * b) % p;
            } else {
                int s = 0, pw = 1, x = a, y = b;
                for (int i = 0; i < e; ++i) {
                    s += ((x % p + y % p) % p) * pw;
                    pw *= p;
                    x /= p;
                    y /= p;
                }
                add_[a * q + b] = s;
                mul_[a * q + b] = poly_mul(a, b, p, e, mod);
            }
        }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (add_[a * q + b] == 0) neg_[a] = b;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = b;
}

int Field::inv(int a) const {
    if (a == 0 || inv_[a] < 0) throw std::domain_error("field inverse of zero");
    return inv_[a];
}

const Field& Field::get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<Field>(q)).first;
    return *it->second;
}

FqMat::FqMat(int q, int n) : q_(q), n_(n), a_(n * n, 0) {}

FqMat FqMat::identity(int q, int n) {
    FqMat m(q, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMat FqMat::from_rows(int q, const std::vector<std::vector<int>>& rows) {
    FqMat m(q, static_cast<int>(rows.size()));
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c) m.set(r, c, rows[r][c]);
    return m;
}

FqMat FqMat::mul(const FqMat& rhs) const {
    if (q_ != rhs.q_ || n_ != rhs.n_) throw std::invalid_argument("matrix mul: shape/field mismatch");
    const Field& F = Field::get(q_);
    FqMat out(q_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            int aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < n_; ++j) {
                int prod = F.mul(aik, rhs.at(k, j));
                if (prod) out.set(i, j, F.add(out.at(i, j), prod));
            }
        }
    return out;
}

FqMat FqMat::inverse() const {
    const Field& F = Field::get(q_);
    FqMat work = *this, inv = identity(q_, n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (work.at(r, col)) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("matrix not invertible");
        if (pivot != col)
            for (int c = 0; c < n_; ++c) {
                std::swap(work.a_[pivot * n_ + c], work.a_[col * n_ + c]);
                std::swap(inv.a_[pivot * n_ + c], inv.a_[col * n_ + c]);
            }
        int s = F.inv(work.at(col, col));
        for (int c = 0; c < n_; ++c) {
            work.set(col, c, F.mul(s, work.at(col, c)));
            inv.set(col, c, F.mul(s, inv.at(col, c)));
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            int f = work.at(r, col);
            if (!f) continue;
            for (int c = 0; c < n_; ++c) {
                work.set(r, c, F.sub(work.at(r, c), F.mul(f, work.at(col, c))));
                inv.set(r, c, F.sub(inv.at(r, c), F.mul(f, inv.at(col, c))));
            }
        }
    }
    return inv;
}

bool FqMat::invertible() const {
    const Field& F = Field::get(q_);
    FqMat work = *this;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (work.at(r, col)) { pivot = r; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int c = 0; c < n_; ++c) std::swap(work.a_[pivot * n_ + c], work.a_[col * n_ + c]);
        int s = F.inv(work.at(col, col));
        for (int r = col + 1; r < n_; ++r) {
            int f = F.mul(work.at(r, col), s);
            if (!f) continue;
            for (int c = col; c < n_; ++c)
                work.set(r, c, F.sub(work.at(r, c), F.mul(f, work.at(col, c))));
        }
    }
    return true;
}

bool FqMat::is_identity() const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

int FqMat::leading_block_level() const {
    for (int j = 0; j <= n_; ++j) {
        bool ok = true;
        for (int r = 0; r < n_ && ok; ++r)
            for (int c = 0; c < n_ && ok; ++c)
                if (r >= j || c >= j)
                    if (at(r, c) != (r == c ? 1 : 0)) ok = false;
        if (ok) return j;
    }
    return n_;
}

bool FqMat::is_identity_outside_lower_block(int block) const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (r < n_ - block || c < n_ - block)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

std::string FqMat::hex() const {
    static const char* digits = "0123456789abcdef";
    if (q_ > 16) throw std::invalid_argument("hex grammar supports q <= 16");
    std::string s;
    for (uint8_t v : a_) s += digits[v];
    return s;
}

FqMat FqMat::parse_hex(int q, int n, const std::string& text) {
    if (static_cast<int>(text.size()) != n * n)
        throw std::invalid_argument("matrix hex string has wrong length");
    FqMat m(q, n);
    for (int i = 0; i < n * n; ++i) {
        char c = text[i];
        int v = c >= 'a' ? c - 'a' + 10 : c >= 'A' ? c - 'A' + 10 : c - '0';
        if (v < 0 || v >= q) throw std::invalid_argument("matrix entry out of field range");
        m.a_[i] = static_cast<uint8_t>(v);
    }
    return m;
}

size_t FqMat::hash() const {
    size_t h = 1469598103934665603ull ^ (static_cast<size_t>(q_) << 8) ^ n_;
    for (uint8_t v : a_) {
        h ^= v + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Int gl_order(int n, int q) {
    Int qn = pow_int(q, n), r = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

std::vector<FqMat> general_linear_group(int n, int q, const Int& max_elements) {
    if (gl_order(n, q) > max_elements)
        throw std::length_error("general_linear_group: order exceeds the element guard");
    // Build rows top-down keeping them independent; Gaussian elimination state
    // carried as a row-reduced basis.
    std::vector<FqMat> out;
    const Field& F = Field::get(q);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= q;

    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::function<void(int, std::vector<std::vector<int>>)> rec =
        [&](int r, std::vector<std::vector<int>> basis) {
            if (r == n) {
                out.push_back(FqMat::from_rows(q, rows));
                return;
            }
            for (int code = 1; code < total; ++code) {
                std::vector<int> v(n);
                int c = code;
                for (int i = n - 1; i >= 0; --i) { v[i] = c % q; c /= q; }
                // reduce against basis (each basis row has a known pivot)
                std::vector<int> red = v;
                for (const auto& b : basis) {
                    int piv = 0;
                    while (piv < n && !b[piv]) ++piv;
                    if (piv < n && red[piv]) {
                        int f = F.mul(red[piv], F.inv(b[piv]));
                        for (int i = 0; i < n; ++i) red[i] = F.sub(red[i], F.mul(f, b[i]));
                    }
                }
                bool zero = true;
                for (int i = 0; i < n; ++i) zero = zero && !red[i];
                if (zero) continue;
                rows[r] = v;
                auto nb = basis;
                nb.push_back(red);
                rec(r + 1, std::move(nb));
            }
        };
    rec(0, {});
    return out;
}

}  // namespace dcalg
