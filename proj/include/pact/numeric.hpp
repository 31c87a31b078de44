#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pact/error.hpp"

namespace pact {

// ============================================================================
// Sampled numeric checks for the two infinite worked examples:
//   - ℤ acting on the ray Y = (0,∞) by θ_n(y) = n + y on Y_{-n},
//     with Y_n = (max{0,n}, ∞), Φ(n,y) = n+y, φ(n,f) = f+n;
//   - GL(2,ℝ) acting partially on ℝ by Möbius transformations.
// ============================================================================

inline constexpr double ray_tol = 1e-9;       // affine comparisons
inline constexpr double mobius_tol = 1e-6;    // relative; division amplifies error
inline constexpr double singular_eps = 1e-12; // |cx+d| at or below this is "undefined"

struct NumericLaw {
    std::string law;
    long checked = 0;
    long passed = 0;
    double worst_error = 0.0;
    std::string witness; // first violation, if any

    NumericLaw() = default;
    explicit NumericLaw(std::string name) : law(std::move(name)) {}

    void record(bool ok, double err, const std::string& w) {
        ++checked;
        if (ok)
            ++passed;
        else if (witness.empty())
            witness = w;
        if (err > worst_error) worst_error = err;
    }
};

struct NumericReport {
    std::string title;
    std::uint64_t seed = 0;
    long domain_misses = 0; // near-singular cases skipped, never evaluated
    std::vector<NumericLaw> laws;

    bool passed() const {
        for (const auto& l : laws)
            if (l.passed != l.checked) return false;
        return true;
    }

    std::string text() const {
        std::ostringstream os;
        os << title << " (seed " << seed << "): " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& l : laws) {
            os << "  [" << (l.passed == l.checked ? "ok" : "FAIL") << "] " << l.law << ": " << l.passed << "/"
               << l.checked << " worst_error=" << l.worst_error;
            if (!l.witness.empty()) os << "  witness: " << l.witness;
            os << "\n";
        }
        if (domain_misses) os << "  domain misses (skipped, counted separately): " << domain_misses << "\n";
        return os.str();
    }
};

namespace detail {

// Samples live on the dyadic grid 2^-20 so that adding/subtracting integers
// is exact in double precision; the "exact" laws below are then honest.
inline double dyadic(std::mt19937_64& rng, double lo, double hi) {
    const double scale = 1048576.0; // 2^20
    const long long a = static_cast<long long>(lo * scale) + 1;
    const long long b = static_cast<long long>(hi * scale) - 1;
    std::uniform_int_distribution<long long> d(a, b);
    return static_cast<double>(d(rng)) / scale;
}

} // namespace detail

// θ_n(y) = n + y when y ∈ Y_{-n}, i.e. y > max(0,-n); undefined otherwise.
inline std::optional<double> ray_apply(long n, double y) {
    if (y <= std::max(0.0, static_cast<double>(-n))) return std::nullopt;
    return static_cast<double>(n) + y;
}

// Φ(n,y) = n+y separates exactly the R-classes: Φ(n,y) = Φ(m,z) ⟺ (n,y)R(m,z),
// where (n,y)R(m,z) ⟺ y ∈ Y_{m-n} and m+z = n+y.
inline NumericReport ray_phi_check(std::size_t samples, std::uint64_t seed) {
    NumericReport rep;
    rep.title = "zline: Φ-separation and partial-action axioms on Y = (0,∞)";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> ndist(-20, 20);

    NumericLaw bicond{"Φ(n,y) = Φ(m,z) ⟺ (n,y) R (m,z)"};
    NumericLaw pa1{"(PA1) (-n)·(n·y) = y"};
    NumericLaw pa2{"(PA2) θ_n∘θ_m ≤ θ_{n+m} (defined ⟹ equal)"};
    NumericLaw pa3{"(PA3) 0·y = y"};
    NumericLaw gmap{"Φ(k+n, y) = k + Φ(n,y) exactly"};

    for (std::size_t i = 0; i < samples; ++i) {
        const long n = ndist(rng);
        const long m = ndist(rng);
        const double y = detail::dyadic(rng, 0.0, 50.0);
        double z;
        if (rng() & 1) {
            z = y + static_cast<double>(n - m); // forces Φ-equality when z lands in (0,50)
            if (z <= 0.0 || z >= 50.0) z = detail::dyadic(rng, 0.0, 50.0);
        } else {
            z = detail::dyadic(rng, 0.0, 50.0);
        }

        const double phi_n = static_cast<double>(n) + y;
        const double phi_m = static_cast<double>(m) + z;
        const bool phi_equal = std::fabs(phi_n - phi_m) <= ray_tol;
        const bool related = y > std::max(0.0, static_cast<double>(m - n)) &&
                             std::fabs((static_cast<double>(m) + z) - (static_cast<double>(n) + y)) <= ray_tol;
        {
            std::ostringstream w;
            w << "(n,y)=(" << n << "," << y << ") (m,z)=(" << m << "," << z << ")";
            bicond.record(phi_equal == related, 0.0, w.str());
        }

        if (const auto ny = ray_apply(n, y)) {
            const auto back = ray_apply(-n, *ny);
            const double err = back ? std::fabs(*back - y) : std::numeric_limits<double>::infinity();
            std::ostringstream w;
            w << "(n,y)=(" << n << "," << y << ")";
            pa1.record(back && err <= ray_tol, back ? err : 0.0, w.str());
        }

        if (const auto my = ray_apply(m, y)) {
            if (const auto nmy = ray_apply(n, *my)) {
                const auto direct = ray_apply(n + m, y);
                const double err = direct ? std::fabs(*direct - *nmy) : std::numeric_limits<double>::infinity();
                std::ostringstream w;
                w << "(n,m,y)=(" << n << "," << m << "," << y << ")";
                pa2.record(direct && err <= ray_tol, direct ? err : 0.0, w.str());
            }
        }

        {
            const auto idy = ray_apply(0, y);
            pa3.record(idy && *idy == y, 0.0, "y = " + std::to_string(y));
        }

        {
            const long k = ndist(rng);
            const double lhs = static_cast<double>(k + n) + y;
            const double rhs = static_cast<double>(k) + (static_cast<double>(n) + y);
            std::ostringstream w;
            w << "(k,n,y)=(" << k << "," << n << "," << y << ")";
            gmap.record(lhs == rhs, std::fabs(lhs - rhs), w.str());
        }
    }
    rep.laws = {bicond, pa1, pa2, pa3, gmap};
    return rep;
}

// φ: ℤ×C(X,Y) ∋ (n,f) ↦ f+n ∈ C(X,ℝ); surjectivity witness n = ⌊min F⌋ − 1.
inline NumericReport ray_funcspace_check(std::size_t grid_size, std::size_t samples, std::uint64_t seed) {
    if (grid_size < 1) throw error("ray_funcspace_check: grid_size must be >= 1");
    NumericReport rep;
    rep.title = "zline: φ on C(X,Y) over a " + std::to_string(grid_size) + "-point grid";
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    NumericLaw positive{"f = F - n has f(x) > 0 for all x"};
    NumericLaw surj{"φ(n,f) = F exactly (surjectivity witness)"};
    NumericLaw sep{"φ(n,f) = φ(m,g) ⟺ (n,f) R (m,g)"};

    std::vector<double> F(grid_size), f(grid_size), g(grid_size);
    for (std::size_t i = 0; i < samples; ++i) {
        for (auto& v : F) v = detail::dyadic(rng, -25.0, 25.0);
        const double m = *std::min_element(F.begin(), F.end());
        const long n = static_cast<long>(std::floor(m)) - 1;
        bool all_pos = true, exact = true;
        for (std::size_t k = 0; k < grid_size; ++k) {
            f[k] = F[k] - static_cast<double>(n);
            if (!(f[k] > 0.0)) all_pos = false;
            if (f[k] + static_cast<double>(n) != F[k]) exact = false;
        }
        positive.record(all_pos, 0.0, "min F = " + std::to_string(m));
        surj.record(exact, 0.0, "min F = " + std::to_string(m));

        // second representative: correlated half the time
        long m2;
        if (rng() & 1) {
            m2 = n - static_cast<long>(rng() % 4); // deeper shift, still in C(X,Y)
            for (std::size_t k = 0; k < grid_size; ++k) g[k] = F[k] - static_cast<double>(m2);
        } else {
            m2 = static_cast<long>(std::floor(detail::dyadic(rng, -20.0, 20.0)));
            for (std::size_t k = 0; k < grid_size; ++k) {
                g[k] = detail::dyadic(rng, 0.0, 50.0); // arbitrary positive map
            }
        }
        bool g_ok = true;
        for (double v : g)
            if (!(v > 0.0)) g_ok = false;
        if (g_ok) {
            bool phi_equal = true, related_dom = true, related_val = true;
            for (std::size_t k = 0; k < grid_size; ++k) {
                if (std::fabs((f[k] + static_cast<double>(n)) - (g[k] + static_cast<double>(m2))) > ray_tol)
                    phi_equal = false;
                if (!(f[k] > std::max(0.0, static_cast<double>(m2 - n)))) related_dom = false;
                if (std::fabs(g[k] - (f[k] + static_cast<double>(n - m2))) > ray_tol) related_val = false;
            }
            sep.record(phi_equal == (related_dom && related_val), 0.0,
                       "n = " + std::to_string(n) + ", m = " + std::to_string(m2));
        }
    }
    rep.laws = {positive, surj, sep};
    return rep;
}

// ---------------------------------------------------------------------------
// GL(2,ℝ) Möbius action
// ---------------------------------------------------------------------------

struct Moebius {
    double a, b, c, d;
    double det() const { return a * d - b * c; }
    Moebius adjugate() const { return {d, -b, -c, a}; } // same Möbius action as the inverse
};

inline Moebius make_moebius(double a, double b, double c, double d) {
    Moebius m{a, b, c, d};
    if (std::fabs(m.det()) <= singular_eps) throw error("moebius: matrix is singular within tolerance");
    return m;
}

inline Moebius operator*(const Moebius& g, const Moebius& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

inline std::optional<double> mobius_apply(const Moebius& g, double x) {
    const double den = g.c * x + g.d;
    if (std::fabs(den) <= singular_eps) return std::nullopt;
    return (g.a * x + g.b) / den;
}

inline NumericReport mobius_axiom_check(std::size_t samples, std::uint64_t seed) {
    NumericReport rep;
    rep.title = "mobius: GL(2,ℝ) partial-action axioms on ℝ";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    std::uniform_real_distribution<double> xdist(-10.0, 10.0);

    const auto sample_matrix = [&] {
        while (true) {
            Moebius m{entry(rng), entry(rng), entry(rng), entry(rng)};
            if (std::fabs(m.det()) > 0.1) return m;
        }
    };
    const auto rel_err = [](double got, double want) {
        return std::fabs(got - want) / std::max(1.0, std::fabs(want));
    };

    NumericLaw pa1{"(PA1) g⁻¹·(g·x) = x (relative 1e-6)"};
    NumericLaw pa2{"(PA2) g·(h·x) = (gh)·x (relative 1e-6)"};
    NumericLaw pa3{"(PA3) identity matrix acts as the identity, exactly"};

    for (std::size_t i = 0; i < samples; ++i) {
        const Moebius g = sample_matrix();
        const Moebius h = sample_matrix();
        const double x = xdist(rng);

        if (const auto gx = mobius_apply(g, x)) {
            if (const auto back = mobius_apply(g.adjugate(), *gx)) {
                const double err = rel_err(*back, x);
                std::ostringstream w;
                w << "g=(" << g.a << "," << g.b << ";" << g.c << "," << g.d << ") x=" << x;
                pa1.record(err <= mobius_tol, err, w.str());
            } else {
                ++rep.domain_misses;
            }
        }

        if (const auto hx = mobius_apply(h, x)) {
            if (const auto ghx = mobius_apply(g, *hx)) {
                if (const auto direct = mobius_apply(g * h, x)) {
                    const double err = rel_err(*direct, *ghx);
                    std::ostringstream w;
                    w << "x=" << x << " via h then g";
                    pa2.record(err <= mobius_tol, err, w.str());
                } else {
                    ++rep.domain_misses;
                }
            }
        }

        const Moebius id{1, 0, 0, 1};
        const auto idx = mobius_apply(id, x);
        pa3.record(idx && *idx == x, 0.0, "x = " + std::to_string(x));
    }
    rep.laws = {pa1, pa2, pa3};
    return rep;
}

} // namespace pact
