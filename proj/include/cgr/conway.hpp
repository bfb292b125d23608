#pragma once

#include <vector>

#include "cgr/diagram.hpp"

namespace cgr {

// Integer polynomial in z. For a knot the z^0 coefficient is 1 and odd
// coefficients vanish; for a 2-component link even coefficients vanish and
// the z^1 coefficient is the linking number.
struct ConwayPolynomial {
    std::vector<long long> c;

    long long coeff(int k) const { return k < static_cast<int>(c.size()) ? c[k] : 0; }
    int degree() const;
    void trim();
    bool is_zero() const { return degree() < 0; }
    std::string str() const;

    bool operator==(const ConwayPolynomial& o) const;
};

ConwayPolynomial operator+(const ConwayPolynomial& a, const ConwayPolynomial& b);
ConwayPolynomial operator-(const ConwayPolynomial& a, const ConwayPolynomial& b);
// Multiply by z.
ConwayPolynomial shift_z(const ConwayPolynomial& a);

// Conway polynomial by the skein relation nabla(L+) - nabla(L-) = z nabla(L0),
// resolved by descending-diagram reduction from the fixed basepoint
// (component 1, position 0), memoized on canonical encodings.
// Safety cap of 10^6 recursion nodes.
ConwayPolynomial conway_skein(const LinkDiagram& d);

} // namespace cgr
