#include "graphoplex/sympalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gpx {

int Monomial::degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

Integer Monomial::factorial_weight() const {
    Integer w = 1;
    for (int e : exp) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
        w *= f;
    }
    return w;
}

std::string variable_name(int n, int v) {
    return (v < n ? "p" : "q") + std::to_string(v % n + 1);
}

std::string Monomial::str() const {
    std::string s;
    for (int v = 0; v < static_cast<int>(exp.size()); ++v) {
        if (exp[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(n(), v);
        if (exp[v] > 1) s += "^" + std::to_string(exp[v]);
    }
    return s.empty() ? "1" : s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exp.size() != o.exp.size()) throw Error("DimensionMismatch", "monomials in different numbers of variables");
    Monomial m = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] += o.exp[i];
    return m;
}

Monomial Monomial::var(int n, int v) {
    Monomial m = one(n);
    m.exp.at(static_cast<std::size_t>(v)) = 1;
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp > b.exp;
}

PolyElement PolyElement::qa(int n, const std::map<Monomial, Rational>& terms) {
    PolyElement p(n);
    for (const auto& [m, c] : terms) {
        if (m.n() != n) throw Error("DimensionMismatch", "monomial " + m.str() + " has the wrong number of variables");
        if (m.degree() < 2 && c != 0) throw Error("DegreeTooLow", "QA elements have no constant or linear terms");
        p.add(m, c);
    }
    return p;
}

PolyElement PolyElement::monomial(const Monomial& m, const Rational& c) {
    PolyElement p(m.n());
    p.add(m, c);
    return p;
}

void PolyElement::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

PolyElement& PolyElement::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, v] : t_) v *= c;
    return *this;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
    PolyElement p(a.n_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) p.add(ma * mb, ca * cb);
    return p;
}

std::string PolyElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << m.str();
    }
    return os.str();
}

PolyElement partial_derivative(const PolyElement& f, int v) {
    PolyElement out(f.n());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exp.at(static_cast<std::size_t>(v));
        if (e == 0) continue;
        Monomial d = m;
        d.exp[static_cast<std::size_t>(v)] -= 1;
        out.add(d, c * e);
    }
    return out;
}

std::map<std::vector<int>, Rational> cyclic_word_derivative(const std::vector<int>& word, int letter) {
    std::map<std::vector<int>, Rational> out;
    const std::size_t L = word.size();
    for (std::size_t i = 0; i < L; ++i) {
        if (word[i] != letter) continue;
        std::vector<int> w;
        for (std::size_t j = 1; j < L; ++j) w.push_back(word[(i + j) % L]);
        out[w] += 1;
    }
    return out;
}

PolyElement poisson_bracket(const PolyElement& f, const PolyElement& h) {
    if (f.n() != h.n()) throw Error("DimensionMismatch", "brackets need the same number of variables");
    const int n = f.n();
    PolyElement out(n);
    for (int i = 0; i < n; ++i) {
        out += partial_derivative(f, i) * partial_derivative(h, n + i);
        out -= partial_derivative(f, n + i) * partial_derivative(h, i);
    }
    return out;
}

RationalMatrix hamiltonian_matrix(const PolyElement& h) {
    for (const auto& [m, c] : h.terms())
        if (m.degree() != 2) throw Error("NotDegreeTwo", "hamiltonian_matrix needs a homogeneous quadratic");
    const int n = h.n();
    RationalMatrix M(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (int j = 0; j < 2 * n; ++j) {
        PolyElement img = j < n ? partial_derivative(h, n + j) : partial_derivative(h, j - n) * Rational(-1);
        for (const auto& [m, c] : img.terms())
            for (int i = 0; i < 2 * n; ++i)
                if (m.exp[i] == 1) M[i][j] += c;
    }
    return M;
}

RationalMatrix symplectic_form(int n) {
    RationalMatrix J(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        J[i][n + i] = 1;
        J[n + i][i] = -1;
    }
    return J;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RationalMatrix mat_transpose(const RationalMatrix& a) {
    RationalMatrix t(a.empty() ? 0 : a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b, const Rational& c) {
    RationalMatrix s = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) s[i][j] += c * b[i][j];
    return s;
}

bool is_zero_matrix(const RationalMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

void WedgeElement::add(std::vector<Monomial> f, const Rational& c) {
    if (c == 0) return;
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < f.size(); ++i)
        for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j) {
            std::swap(f[j], f[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1]) return;
    auto [it, fresh] = t_.emplace(std::move(f), c * sign);
    if (!fresh) {
        it->second += c * sign;
        if (it->second == 0) t_.erase(it);
    }
}

void WedgeElement::add(const WedgeElement& o, const Rational& c) {
    for (const auto& [f, v] : o.t_) add(f, v * c);
}

void WedgeElement::add_product(const std::vector<PolyElement>& factors, const Rational& c) {
    std::vector<Monomial> cur;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational acc) {
        if (i == factors.size()) {
            add(cur, acc);
            return;
        }
        for (const auto& [m, v] : factors[i].terms()) {
            cur.push_back(m);
            rec(i + 1, acc * v);
            cur.pop_back();
        }
    };
    rec(0, c);
}

std::string WedgeElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : t_) {
        if (!first) os << "; ";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " ^ " : "") << f[i].str();
        os << "]: " << c.get_str();
    }
    return os.str();
}

WedgeElement WedgeElement::embed(int m) const {
    if (m < n_) throw Error("DimensionMismatch", "cannot embed into fewer variables");
    WedgeElement w(m);
    for (const auto& [f, c] : t_) {
        std::vector<Monomial> g;
        for (const Monomial& x : f) {
            Monomial y = Monomial::one(m);
            for (int i = 0; i < n_; ++i) {
                y.exp[i] = x.exp[i];
                y.exp[m + i] = x.exp[n_ + i];
            }
            g.push_back(y);
        }
        w.add(g, c);
    }
    return w;
}

WedgeElement ce_boundary(const WedgeElement& w) {
    WedgeElement out(w.n());
    for (const auto& [f, c] : w.terms()) {
        const std::size_t k = f.size();
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = s + 1; t < k; ++t) {
                // 1-based exponent s + t - 1 equals 0-based s + t + 1
                Rational sign = ((s + t + 1) % 2 == 0) ? 1 : -1;
                PolyElement br = poisson_bracket(PolyElement::monomial(f[s]), PolyElement::monomial(f[t]));
                for (const auto& [m, v] : br.terms()) {
                    std::vector<Monomial> g{m};
                    for (std::size_t j = 0; j < k; ++j)
                        if (j != s && j != t) g.push_back(f[j]);
                    out.add(g, c * sign * v);
                }
            }
    }
    return out;
}

WedgeElement hamiltonian_action(const PolyElement& h, const WedgeElement& w) {
    WedgeElement out(w.n());
    for (const auto& [f, c] : w.terms())
        for (std::size_t j = 0; j < f.size(); ++j) {
            PolyElement img = poisson_bracket(PolyElement::monomial(f[j]), h);
            for (const auto& [m, v] : img.terms()) {
                std::vector<Monomial> g = f;
                g[j] = m;
                out.add(g, c * v);
            }
        }
    return out;
}

std::map<std::vector<Monomial>, Rational> state_sum_tensor(const Graph& g, int n, std::size_t* states) {
    std::map<std::vector<Monomial>, Rational> out;
    std::size_t visited = 0;
    std::vector<Monomial> at(g.num_vertices(), Monomial::one(n));
    std::vector<int> tails = g.edge_tails();
    std::function<void(std::size_t, int)> rec = [&](std::size_t e, int sign) {
        if (e == tails.size()) {
            ++visited;
            out[at] += sign;
            return;
        }
        int t = tails[e], h = g.partner[t];
        int vt = g.vert_of[t], vh = g.vert_of[h];
        for (int i = 0; i < n; ++i)
            for (int swap = 0; swap < 2; ++swap) {
                int pv = swap ? vh : vt, qv = swap ? vt : vh;
                at[pv].exp[i] += 1;
                at[qv].exp[n + i] += 1;
                rec(e + 1, swap ? -sign : sign);
                at[pv].exp[i] -= 1;
                at[qv].exp[n + i] -= 1;
            }
    };
    rec(0, 1);
    if (states) *states = visited;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

WedgeElement invariant_state_sum(const Species& sp, const Graph& g, int n) {
    bool ok = sp.tag == SpeciesTag::CC || (sp.tag == SpeciesTag::GROUP && sp.group->order() == 1);
    if (!ok) throw Error("NotSupported", "state sums are defined for the commutative species");
    if (n < 1) throw Error("DimensionMismatch", "n must be positive");
    WedgeElement w(n);
    for (const auto& [f, c] : state_sum_tensor(g, n)) w.add(f, c);
    return w;
}

WedgeElement invariant_state_sum(const Species& sp, const ChainVector& c, int n) {
    WedgeElement w(n);
    for (const auto& [key, coef] : c.terms()) w.add(invariant_state_sum(sp, graph_from_key(sp, key), n), coef);
    return w;
}

Rational pairing_Mprime(const WedgeElement& a, const WedgeElement& b) {
    if (a.n() != b.n()) throw Error("DimensionMismatch", "wedges in different numbers of variables");
    Rational s = 0;
    for (const auto& [f, c] : a.terms()) {
        auto it = b.terms().find(f);
        if (it == b.terms().end()) continue;
        Integer w = 1;
        for (const Monomial& m : f) w *= m.factorial_weight();
        s += c * it->second * Rational(w);
    }
    return s;
}

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace

std::vector<PolyElement> moyal_star(const PolyElement& f, const PolyElement& h, int m_max) {
    if (f.n() != h.n()) throw Error("DimensionMismatch", "star product needs the same number of variables");
    const int n = f.n();
    std::vector<PolyElement> out(m_max + 1, PolyElement(n));
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : h.terms()) {
            // x[i] = edges p_i(F) -> q_i(H), y[i] = edges q_i(F) -> p_i(H)
            std::vector<int> x(n, 0), y(n, 0);
            std::function<void(int, int)> rec = [&](int slot, int used) {
                if (slot == 2 * n) {
                    Integer w = 1;
                    int minus = 0;
                    Monomial r = a * b;
                    for (int i = 0; i < n; ++i) {
                        w *= binomial(a.exp[i], x[i]) * binomial(b.exp[n + i], x[i]) * factorial(x[i]);
                        w *= binomial(a.exp[n + i], y[i]) * binomial(b.exp[i], y[i]) * factorial(y[i]);
                        minus += y[i];
                        r.exp[i] -= x[i] + y[i];
                        r.exp[n + i] -= x[i] + y[i];
                    }
                    Rational c = ca * cb * Rational(w);
                    out[used].add(r, minus % 2 ? Rational(-c) : c);
                    return;
                }
                int i = slot % n;
                bool px = slot < n;
                int cap = px ? std::min(a.exp[i], b.exp[n + i]) : std::min(a.exp[n + i], b.exp[i]);
                for (int t = 0; t <= cap && used + t <= m_max; ++t) {
                    (px ? x : y)[i] = t;
                    rec(slot + 1, used + t);
                }
                (px ? x : y)[i] = 0;
            };
            rec(0, 0);
        }
    return out;
}

std::vector<PolyElement> moyal_star_by_iteration(const PolyElement& f, const PolyElement& h, int m_max) {
    if (f.n() != h.n()) throw Error("DimensionMismatch", "star product needs the same number of variables");
    const int n = f.n();
    using Tensor = std::map<std::pair<Monomial, Monomial>, Rational>;
    auto d = [](const Monomial& m, int v, Rational& c) {
        Monomial r = m;
        c *= r.exp[v];
        if (r.exp[v] > 0) r.exp[v] -= 1;
        return r;
    };
    Tensor cur;
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : h.terms()) cur[{a, b}] += ca * cb;
    std::vector<PolyElement> out;
    for (int m = 0; m <= m_max; ++m) {
        PolyElement term(n);
        for (const auto& [ab, c] : cur) term.add(ab.first * ab.second, c / Rational(factorial(m)));
        out.push_back(term);
        Tensor next;
        for (const auto& [ab, c] : cur)
            for (int i = 0; i < n; ++i) {
                Rational c1 = c;
                Monomial a1 = d(ab.first, i, c1);
                Monomial b1 = d(ab.second, n + i, c1);
                if (c1 != 0) next[{a1, b1}] += c1;
                Rational c2 = -c;
                Monomial a2 = d(ab.first, n + i, c2);
                Monomial b2 = d(ab.second, i, c2);
                if (c2 != 0) next[{a2, b2}] += c2;
            }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return out;
}

std::vector<PolyElement> moyal_series_product(const std::vector<PolyElement>& f,
                                              const std::vector<PolyElement>& h, int m_max) {
    int n = !f.empty() ? f[0].n() : !h.empty() ? h[0].n() : 1;
    std::vector<PolyElement> out(m_max + 1, PolyElement(n));
    for (int i = 0; i < static_cast<int>(f.size()) && i <= m_max; ++i)
        for (int j = 0; i + j <= m_max && j < static_cast<int>(h.size()); ++j) {
            auto terms = moyal_star(f[i], h[j], m_max - i - j);
            for (int l = 0; l < static_cast<int>(terms.size()); ++l) out[i + j + l] += terms[l];
        }
    return out;
}

} // namespace gpx
