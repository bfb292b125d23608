#include "cgr/laurent.hpp"

namespace cgr {

Laurent Laurent::monomial(Int a, int pow) {
    if (a == 0) return {};
    Laurent r;
    r.lo = pow;
    r.c = {std::move(a)};
    return r;
}

bool Laurent::is_zero() const {
    for (auto& a : c)
        if (a != 0) return false;
    return true;
}

int Laurent::deg_hi() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return lo + i;
    return lo - 1;
}

int Laurent::deg_lo() const {
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (c[i] != 0) return lo + i;
    return lo;
}

Int Laurent::coeff(int pow) const {
    const int i = pow - lo;
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

void Laurent::trim() {
    int a = 0, b = static_cast<int>(c.size());
    while (b > a && c[b - 1] == 0) --b;
    while (a < b && c[a] == 0) ++a;
    if (a == b) {
        lo = 0;
        c.clear();
        return;
    }
    lo += a;
    c = std::vector<Int>(c.begin() + a, c.begin() + b);
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    const int lo = std::min(a.lo, b.lo);
    const int hi = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size()));
    Laurent r;
    r.lo = lo;
    r.c.assign(hi - lo, 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - lo + i] += b.c[i];
    r.trim();
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent nb = b;
    for (auto& x : nb.c) x = -x;
    return a + nb;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Laurent r;
    r.lo = a.lo + b.lo;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

bool operator==(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    x.trim();
    y.trim();
    return x.lo == y.lo && x.c == y.c;
}

Laurent divide_exact(const Laurent& a, const Laurent& b) {
    if (b.c.empty()) throw internal_error("laurent division by zero");
    Laurent num = a, den = b;
    num.trim();
    den.trim();
    if (num.c.empty()) return {};
    // Ordinary polynomial long division on the coefficient vectors; the
    // x-power offset is handled separately.
    const int off = num.lo - den.lo;
    std::vector<Int> q(num.c.size() >= den.c.size() ? num.c.size() - den.c.size() + 1 : 0, 0);
    std::vector<Int> rem = num.c;
    const Int lead = den.c.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(den.c.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
            throw internal_error("laurent division not exact");
        Int f = rem[i] / lead;
        const int qi = i - static_cast<int>(den.c.size()) + 1;
        q[qi] = f;
        for (size_t j = 0; j < den.c.size(); ++j) rem[qi + j] -= f * den.c[j];
    }
    for (auto& x : rem)
        if (x != 0) throw internal_error("laurent division not exact (remainder)");
    Laurent r;
    r.lo = off;
    r.c = std::move(q);
    r.trim();
    return r;
}

Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Laurent::monomial(1, 0);
    int sign = 1;
    Laurent prev = Laurent::monomial(1, 0);
    for (int k = 0; k < n - 1; ++k) {
        // Pivot: any row with nonzero entry in column k.
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].c.empty()) {
                piv = i;
                break;
            }
        if (piv < 0) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Laurent t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Laurent det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& x : det.c) x = -x;
    return det;
}

ConwayPolynomial rewrite_in_z(Laurent d) {
    d.trim();
    ConwayPolynomial out;
    // Highest power of z equals the highest power of x; peel top terms with
    // (x - 1/x)^m until nothing remains.
    while (!d.c.empty()) {
        const int m = d.deg_hi();
        if (m < 0 || d.deg_lo() != -m)
            throw internal_error("laurent not symmetric in x, x^-1 span");
        const Int a = d.coeff(m);
        if (a == 0) throw internal_error("rewrite_in_z: degree bookkeeping broke");
        if (static_cast<int>(out.c.size()) <= m) out.c.resize(m + 1, 0);
        if (!a.fits_slong_p()) throw internal_error("conway coefficient overflow");
        out.c[m] = static_cast<long long>(a.get_si());
        // Subtract a*(x - 1/x)^m.
        Laurent pw = Laurent::monomial(1, 0);
        const Laurent z{-1, {Int(-1), Int(0), Int(1)}};   // x - x^-1
        for (int i = 0; i < m; ++i) pw = pw * z;
        for (auto& x : pw.c) x *= a;
        d = d - pw;
        if (d.deg_hi() >= m && !d.c.empty())
            throw internal_error("rewrite_in_z did not reduce degree");
    }
    out.trim();
    return out;
}

} // namespace cgr
