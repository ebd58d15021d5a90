#pragma once

#include "graphoplex/complexes.hpp"

#include <map>
#include <string>
#include <vector>

namespace gpx {

/// Exponent vector over p_1..p_n, q_1..q_n (in that order, so variable i < n
/// is p_{i+1} and variable n + i is q_{i+1}).
struct Monomial {
    std::vector<int> exp;

    int n() const { return static_cast<int>(exp.size()) / 2; }
    int degree() const;
    /// Product of alpha_i! over all exponents.
    Integer factorial_weight() const;
    std::string str() const; // "p1^2*q1", "1" for the constant
    Monomial operator*(const Monomial& o) const;

    static Monomial one(int n) { return Monomial{std::vector<int>(2 * static_cast<std::size_t>(n), 0)}; }
    static Monomial var(int n, int v);
};

/// Graded lexicographic: lower degree first, then larger exponents of
/// earlier variables first (p before q).
bool operator<(const Monomial& a, const Monomial& b);
inline bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

std::string variable_name(int n, int v);

/// Polynomial in 2n variables. The plain constructor admits every degree
/// (the Moyal algebra); `qa` rejects terms of degree below 2.
class PolyElement {
public:
    explicit PolyElement(int n = 1) : n_(n) {}
    static PolyElement qa(int n, const std::map<Monomial, Rational>& terms);
    static PolyElement monomial(const Monomial& m, const Rational& c = 1);
    static PolyElement variable(int n, int v) { return monomial(Monomial::var(n, v)); }

    int n() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Monomial& m, const Rational& c);

    PolyElement& operator+=(const PolyElement& o);
    PolyElement& operator-=(const PolyElement& o);
    PolyElement& operator*=(const Rational& c);
    friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
    friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
    friend PolyElement operator*(PolyElement a, const Rational& c) { return a *= c; }
    friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
    friend bool operator==(const PolyElement& a, const PolyElement& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    /// Canonical text: monomials in increasing order, explicit rational
    /// coefficients, "0" when empty. "2*p1*q1 + -1/3*q2^2".
    std::string str() const;

private:
    int n_;
    std::map<Monomial, Rational> t_;
};

PolyElement partial_derivative(const PolyElement& f, int v);

/// Cutting a cyclic word at every occurrence of the letter and reading what
/// is left as a linear word starting right after the cut.
std::map<std::vector<int>, Rational> cyclic_word_derivative(const std::vector<int>& word, int letter);

/// {F, H} = sum_i dF/dp_i dH/dq_i - dF/dq_i dH/dp_i.
PolyElement poisson_bracket(const PolyElement& f, const PolyElement& h);

/// 2n x 2n matrix of xi_H on the linear forms p_1..p_n, q_1..q_n, where
/// xi_H(p_i) = dH/dq_i and xi_H(q_i) = -dH/dp_i. Column j holds the image of
/// basis vector j. Throws Error("NotDegreeTwo") unless H is homogeneous
/// quadratic.
using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix hamiltonian_matrix(const PolyElement& h);
/// The standard J = [[0, I], [-I, 0]] in the same basis.
RationalMatrix symplectic_form(int n);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_transpose(const RationalMatrix& a);
RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b, const Rational& c = 1);
bool is_zero_matrix(const RationalMatrix& a);

/// Combination of wedges F_1 ^ ... ^ F_k of monomials. Stored strictly
/// sorted; insertion applies the sorting sign and drops repeated factors.
class WedgeElement {
public:
    explicit WedgeElement(int n = 1) : n_(n) {}
    int n() const { return n_; }
    void add(std::vector<Monomial> factors, const Rational& c);
    void add(const WedgeElement& o, const Rational& c = 1);
    /// Adds c * F_1 ^ ... ^ F_k for polynomial factors, multilinearly.
    void add_product(const std::vector<PolyElement>& factors, const Rational& c);
    const std::map<std::vector<Monomial>, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    friend bool operator==(const WedgeElement& a, const WedgeElement& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    /// "[p1*q1 ^ p2^2]: 3/2" lines joined by "; ", "0" when empty.
    std::string str() const;
    /// The same element in 2m >= 2n variables.
    WedgeElement embed(int m) const;

private:
    int n_;
    std::map<std::vector<Monomial>, Rational> t_;
};

/// sum_{s<t} (-1)^(s+t-1) {F_s, F_t} ^ F_1 ... F_s^ ... F_t^ ... F_k (1-based).
WedgeElement ce_boundary(const WedgeElement& w);

/// Action of a quadratic Hamiltonian on wedges: the derivation extending
/// F -> {F, H} factorwise.
WedgeElement hamiltonian_action(const PolyElement& h, const WedgeElement& w);

/// Unsymmetrized state sum: for every assignment of (index i, direction) to
/// the edges, the ordered tuple of vertex monomials, with -1 for each edge
/// that carries q at its tail. Keys are vertex tuples in vertex order.
/// `states`, when given, receives the number of states visited.
std::map<std::vector<Monomial>, Rational> state_sum_tensor(const Graph& g, int n, std::size_t* states = nullptr);

/// The invariant I(G) in Lambda(QA_n) of a commutative-species graph, for
/// the given orientation representative. Loops contribute nothing.
WedgeElement invariant_state_sum(const Species& sp, const Graph& g, int n);
WedgeElement invariant_state_sum(const Species& sp, const ChainVector& c, int n);

/// Pairing on wedges: distinct sorted wedges are orthogonal, and a wedge of
/// monomials m_1..m_k pairs with itself to prod_j alpha(m_j)!, the coinvariant
/// pairing on polynomials. On squarefree monomials this is the orthonormal
/// pairing.
Rational pairing_Mprime(const WedgeElement& a, const WedgeElement& b);

/// Terms B^m(F, H)/m! for m = 0..m_max by the picture formula: choose a_i
/// edges from p_i in F to q_i in H and b_i from q_i in F to p_i in H, each
/// configuration weighted by the number of matched deletions and (-1)^sum b.
std::vector<PolyElement> moyal_star(const PolyElement& f, const PolyElement& h, int m_max);
/// The same terms by iterating the bidifferential operator B on F (x) H.
std::vector<PolyElement> moyal_star_by_iteration(const PolyElement& f, const PolyElement& h, int m_max);
/// Truncated series product: sum_m t^m (terms of order m), with series
/// given as per-order coefficient lists.
std::vector<PolyElement> moyal_series_product(const std::vector<PolyElement>& f,
                                              const std::vector<PolyElement>& h, int m_max);

} // namespace gpx
