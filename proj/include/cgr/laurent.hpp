#pragma once

#include <vector>

#include "cgr/conway.hpp"
#include "cgr/rational.hpp"

namespace cgr {

// Dense Laurent polynomial over Z: coeff(lo + i) = c[i]. Zero = empty c.
struct Laurent {
    int lo = 0;
    std::vector<Int> c;

    static Laurent zero() { return {}; }
    static Laurent monomial(Int a, int pow);

    bool is_zero() const;
    int deg_hi() const;   // largest power with nonzero coeff; lo-1 when zero
    int deg_lo() const;
    Int coeff(int pow) const;
    void trim();
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
bool operator==(const Laurent& a, const Laurent& b);

// Exact division; throws internal_error if the division is not exact.
Laurent divide_exact(const Laurent& a, const Laurent& b);

// Fraction-free Bareiss determinant.
Laurent laurent_det(std::vector<std::vector<Laurent>> m);

// Rewrites a Laurent polynomial D(x) as a polynomial in z = x - 1/x.
// Throws internal_error if D is not expressible (signals a bug upstream).
ConwayPolynomial rewrite_in_z(Laurent d);

} // namespace cgr
