#ifndef COCT_MULTI_INDEX_HPP
#define COCT_MULTI_INDEX_HPP

#include <cstdint>
#include <vector>

namespace coct {

// Exponent vector (alpha_1, ..., alpha_n), all entries >= 0.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);

// All multi-indices of length n with |a| = d, canonical (lex-descending)
// order: (d,0,...,0) first, (0,...,0,d) last.
std::vector<MultiIndex> multi_indices(int n, int d);

// Monomial z^alpha zbar^beta.
struct CMonomial {
    MultiIndex alpha;
    MultiIndex beta;

    int total_degree() const { return degree(alpha) + degree(beta); }

    friend bool operator==(const CMonomial& a, const CMonomial& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

// Canonical monomial order: total degree ascending, then lex-descending on
// the concatenated vector (alpha_1..alpha_n, beta_1..beta_n). Within one
// homogeneous degree this lists z_1^k first and zbar_n^k last.
struct MonomialLess {
    bool operator()(const CMonomial& a, const CMonomial& b) const;
};

// Lex-descending order on bare multi-indices of equal length, degree first.
struct MultiIndexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Binomial coefficient as exact integer; C(n, k) = 0 for k < 0 or k > n.
std::uint64_t binomial(int n, int k);

// All monomials of P_k(C^n) in canonical order; size C(2n+k-1, 2n-1).
std::vector<CMonomial> homogeneous_basis(int n, int k);

}  // namespace coct

#endif
