#include "poincare/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace poincare {

namespace {

// Extended Euclid: returns (g, u, v) with u*a + v*b = g = gcd(a,b).
struct Egcd {
    std::int64_t g, u, v;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.v, e.u - (a / b) * e.v};
}

std::int64_t mod_inverse(std::int64_t d, std::int64_t c) {
    // inverse of d mod c, in [0, c); requires gcd(d, c) = 1, c >= 1
    if (c == 1) return 0;
    std::int64_t dm = d % c;
    if (dm < 0) dm += c;
    Egcd e = egcd(dm, c);
    std::int64_t a = e.u % c;
    if (a < 0) a += c;
    return a;
}

Real regz_numerator(const ZPoint& z, const TermIndex& t)
{
    // a c (x^2 + y^2) + (a d + b c) x + b d
    Real z2 = z.x * z.x + z.y * z.y;
    return Real(t.a) * Real(t.c) * z2 + Real(t.a * t.d + t.b * t.c) * z.x + Real(t.b) * Real(t.d);
}

}  // namespace

std::pair<std::int64_t, std::int64_t> bezout_complete(std::int64_t c, std::int64_t d) {
    if (!((c > 0) || (c == 0 && d == 1)))
        throw std::invalid_argument("bezout_complete: need c > 0 or (c,d) = (0,1)");
    if (std::gcd(c, d) != 1)
        throw std::invalid_argument("bezout_complete: (c,d) not coprime");
    if (c == 0) return {1, 0};
    std::int64_t a = mod_inverse(d, c);
    std::int64_t b = (a * d - 1) / c;
    return {a, b};
}

TermIndex make_term_index(std::int64_t c, std::int64_t d) {
    auto [a, b] = bezout_complete(c, d);
    return TermIndex{c, d, a, b};
}

Real pair_norm_sq(const ZPoint& z, std::int64_t c, std::int64_t d) {
    Real re = Real(c) * z.x + Real(d);
    Real im = Real(c) * z.y;
    return re * re + im * im;
}

std::vector<TermIndex> enumerate_pairs(const ZPoint& z, const Real& radius) {
    if (z.y <= 0) throw std::invalid_argument("enumerate_pairs: need Im z > 0");
    if (radius < 1) throw std::invalid_argument("enumerate_pairs: need radius >= 1");

    struct Entry {
        Real norm_sq;
        TermIndex idx;
    };
    std::vector<Entry> entries;
    const Real r2 = radius * radius;

    entries.push_back({Real(1), make_term_index(0, 1)});

    std::int64_t cmax = floor(radius / z.y).convert_to<std::int64_t>();
    for (std::int64_t c = 1; c <= cmax; ++c) {
        Real s2 = r2 - Real(c) * Real(c) * z.y * z.y;
        if (s2 < 0) continue;
        Real s = sqrt(s2);
        std::int64_t dlo = ceil(-Real(c) * z.x - s).convert_to<std::int64_t>() - 1;
        std::int64_t dhi = floor(-Real(c) * z.x + s).convert_to<std::int64_t>() + 1;
        for (std::int64_t d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, d) != 1) continue;
            Real n2 = pair_norm_sq(z, c, d);
            if (n2 > r2) continue;
            entries.push_back({std::move(n2), make_term_index(c, d)});
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        if (l.norm_sq != r.norm_sq) return l.norm_sq < r.norm_sq;
        if (l.idx.c != r.idx.c) return l.idx.c < r.idx.c;
        return l.idx.d < r.idx.d;
    });

    std::vector<TermIndex> out;
    out.reserve(entries.size());
    for (Entry& e : entries) out.push_back(e.idx);
    return out;
}

LogComplex term_sigma(const ZPoint& z, int k, int m, const TermIndex& idx) {
    if (z.y <= 0) throw std::invalid_argument("term_sigma: need Im z > 0");
    Real n2 = pair_norm_sq(z, idx.c, idx.d);
    Real w = z.y / n2;
    Real two_pi_m = const_two_pi() * m;

    Real logmag = -two_pi_m * w - Real(k) * log(n2) / 2;
    Real arg_u = atan2(Real(idx.c) * z.y, Real(idx.c) * z.x + Real(idx.d));
    Real phase = two_pi_m * (regz_numerator(z, idx) / n2) - Real(k) * arg_u;
    return LogComplex(std::move(logmag), normalize_phase(std::move(phase)));
}

LogComplex term_sigma_deriv(const ZPoint& z, int k, int m, const TermIndex& idx) {
    LogComplex sigma = term_sigma(z, k, m, idx);
    // u = cz + d; factor = 2 pi i m / u^2 - k c / u, in cartesian form
    Real ur = Real(idx.c) * z.x + Real(idx.d);
    Real ui = Real(idx.c) * z.y;
    Real n2 = ur * ur + ui * ui;
    Real n4 = n2 * n2;
    Real u2r = ur * ur - ui * ui;
    Real u2i = 2 * ur * ui;
    Real two_pi_m = const_two_pi() * m;
    Real kc = Real(k) * Real(idx.c);

    Real fre = two_pi_m * u2i / n4 - kc * ur / n2;
    Real fim = two_pi_m * u2r / n4 + kc * ui / n2;
    return lc_mul(sigma, lc_from_cartesian(fre, fim));
}

TermGeometry term_geometry(const ZPoint& z, const Real& alpha, const TermIndex& idx,
                           int k, int m) {
    if (z.y <= 0) throw std::invalid_argument("term_geometry: need Im z > 0");
    Real n2 = pair_norm_sq(z, idx.c, idx.d);
    Real w = z.y / n2;
    Real I = -const_two_pi() * alpha * w + log(w) / 2;
    Real log_r = I - log(z.y) / 2;

    Real regz = regz_numerator(z, idx) / n2;
    Real arg_u = atan2(Real(idx.c) * z.y, Real(idx.c) * z.x + Real(idx.d));
    Real theta = const_two_pi() * alpha * regz - arg_u;
    Real theta_tilde = theta;
    if (k > 0) theta_tilde = const_two_pi() * (Real(m) / k) * regz - arg_u;
    return TermGeometry{std::move(w), std::move(I), std::move(log_r),
                        std::move(theta), std::move(theta_tilde)};
}

Real tail_bound(const ZPoint& z, int k, const Real& radius) {
    if (radius < 2) throw std::domain_error("tail_bound: need radius >= 2");
    if (k < 6) throw std::domain_error("tail_bound: need k >= 6");
    Real n0 = floor(radius);
    Real zabs = sqrt(z.x * z.x + z.y * z.y);
    Real c_z = 8 * (1 + 1 / z.y) * (1 + zabs) / z.y;
    // sum_{n >= n0} (n+1) n^{-k} <= 2 n0^{-(k-1)} (1 + n0/(k-2))
    return log(c_z) + log(Real(2)) - Real(k - 1) * log(n0) + log1p(n0 / (k - 2));
}

Real tail_bound_deriv(const ZPoint& z, int k, int m, const Real& radius) {
    return tail_bound(z, k, radius) + log(const_two_pi() * m + Real(k) / z.y);
}

}  // namespace poincare
