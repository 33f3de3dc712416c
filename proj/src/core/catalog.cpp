#include "core/catalog.hpp"

#include <array>
#include <cmath>
#include <string>

#include "core/harmonics.hpp"
#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace sphdes {

namespace {

constexpr double kPi = 3.14159265358979323846;

Design from_vectors(std::vector<Vec3> vs, std::string label) {
    Design d;
    d.label = std::move(label);
    d.points.reserve(vs.size());
    for (const Vec3& v : vs) d.points.push_back(SpherePoint::from_vector(v));
    return d;
}

std::vector<Vec3> cyclic_family(double a, double b, double c) {
    // Cyclic permutations of (a, +-b, +-c) with b, c > 0.
    std::vector<Vec3> out;
    for (int sb : {+1, -1})
        for (int sc : {+1, -1}) {
            out.push_back({a, sb * b, sc * c});
            out.push_back({sc * c, a, sb * b});
            out.push_back({sb * b, sc * c, a});
        }
    return out;
}

} // namespace

Design platonic(std::string_view name) {
    const double g = (1.0 + std::sqrt(5.0)) / 2.0;
    if (name == "tetrahedron") {
        return from_vectors({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, "tetrahedron");
    }
    if (name == "octahedron") {
        return from_vectors({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                            "octahedron");
    }
    if (name == "cube") {
        std::vector<Vec3> vs;
        for (int sx : {+1, -1})
            for (int sy : {+1, -1})
                for (int sz : {+1, -1}) vs.push_back({double(sx), double(sy), double(sz)});
        return from_vectors(std::move(vs), "cube");
    }
    if (name == "icosahedron") {
        return from_vectors(cyclic_family(0.0, 1.0, g), "icosahedron");
    }
    if (name == "dodecahedron") {
        std::vector<Vec3> vs;
        for (int sx : {+1, -1})
            for (int sy : {+1, -1})
                for (int sz : {+1, -1}) vs.push_back({double(sx), double(sy), double(sz)});
        for (const Vec3& v : cyclic_family(0.0, 1.0 / g, g)) vs.push_back(v);
        return from_vectors(std::move(vs), "dodecahedron");
    }
    throw std::invalid_argument("unknown solid name: " + std::string(name));
}

int default_polar_count(int d) {
    static constexpr std::array<int, 8> counts = {0, 2, 4, 6, 9, 13, 17, 23};
    return (d >= 1 && d <= 7) ? counts[static_cast<std::size_t>(d)] : 0;
}

long lower_bound(int t) {
    if (t < 0) throw std::domain_error("lower_bound: t must be >= 0");
    const long lt = t;
    return (t % 2 == 0) ? (lt + 2) * (lt + 2) / 4 : (lt + 1) * (lt + 3) / 4;
}

namespace {

// Moment residuals F_k = (1/n_theta) sum_i P_2k(x_i) for k = 1..d, over the
// symmetric node set {+-a_j} plus an optional center node, and the Jacobian
// with respect to the half-nodes a_j.
struct MomentSystem {
    int d;
    int n_theta;
    bool center;

    void eval(const std::vector<double>& a, std::vector<double>& f,
              std::vector<double>* jac) const {
        const std::size_t p = a.size();
        const int lmax = 2 * d;
        f.assign(static_cast<std::size_t>(d), 0.0);
        if (jac) jac->assign(static_cast<std::size_t>(d) * p, 0.0);
        std::vector<double> pl(static_cast<std::size_t>(lmax) + 1);
        std::vector<double> dpl(static_cast<std::size_t>(lmax) + 1);
        for (std::size_t j = 0; j < p; ++j) {
            legendre_p_deriv_all(lmax, a[j], pl, dpl);
            for (int k = 1; k <= d; ++k) {
                f[static_cast<std::size_t>(k - 1)] += 2.0 * pl[static_cast<std::size_t>(2 * k)];
                if (jac)
                    (*jac)[static_cast<std::size_t>(k - 1) * p + j] =
                        2.0 * dpl[static_cast<std::size_t>(2 * k)] / n_theta;
            }
        }
        if (center) {
            legendre_p_all(lmax, 0.0, pl);
            for (int k = 1; k <= d; ++k) f[static_cast<std::size_t>(k - 1)] += pl[static_cast<std::size_t>(2 * k)];
        }
        for (double& v : f) v /= n_theta;
    }
};

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// One Levenberg-Marquardt attempt from the given start. The step is the
// minimal-norm Gauss-Newton direction delta = J^T (J J^T + lambda I)^{-1} (-F),
// which also covers the underdetermined systems for d >= 5 where there are
// more node pairs than moment conditions.
bool lm_attempt(const MomentSystem& sys, std::vector<double> a, std::vector<double>& out) {
    constexpr double kLo = 1e-6;
    constexpr double kHi = 1.0 - 1e-6;
    constexpr double kTarget = 1e-14;
    const std::size_t p = a.size();
    const std::size_t d = static_cast<std::size_t>(sys.d);

    std::vector<double> f, jac, f_trial;
    sys.eval(a, f, &jac);
    double lambda = 1e-8;

    for (int iter = 0; iter < 400; ++iter) {
        if (inf_norm(f) <= kTarget) {
            out = a;
            return true;
        }
        // Normal matrix J J^T (d x d) and right-hand side -F.
        std::vector<double> jjt(d * d, 0.0);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = r; c < d; ++c) {
                double s = 0.0;
                for (std::size_t j = 0; j < p; ++j) s += jac[r * p + j] * jac[c * p + j];
                jjt[r * d + c] = jjt[c * d + r] = s;
            }
        bool stepped = false;
        for (int damp = 0; damp < 60 && !stepped; ++damp) {
            std::vector<double> m(jjt);
            for (std::size_t r = 0; r < d; ++r) m[r * d + r] += lambda;
            std::vector<double> rhs(d);
            for (std::size_t r = 0; r < d; ++r) rhs[r] = -f[r];
            std::vector<double> w;
            if (!solve_spd(m, rhs, static_cast<int>(d), w)) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> trial(p);
            bool inside = true;
            for (std::size_t j = 0; j < p; ++j) {
                double delta = 0.0;
                for (std::size_t r = 0; r < d; ++r) delta += jac[r * p + j] * w[r];
                trial[j] = a[j] + delta;
                if (!(trial[j] > kLo && trial[j] < kHi)) inside = false;
            }
            if (inside) {
                sys.eval(trial, f_trial, nullptr);
                if (inf_norm(f_trial) < inf_norm(f)) {
                    a = std::move(trial);
                    sys.eval(a, f, &jac);
                    lambda = std::max(lambda / 3.0, 1e-14);
                    stepped = true;
                    break;
                }
            }
            lambda *= 4.0;
        }
        if (!stepped) return false;
    }
    if (inf_norm(f) <= kTarget) {
        out = a;
        return true;
    }
    return false;
}

bool nodes_distinct(const std::vector<double>& a, bool center) {
    std::vector<double> s(a);
    std::sort(s.begin(), s.end());
    if (center && s.front() < 1e-7) return false;
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j] - s[j - 1] < 1e-7) return false;
    return true;
}

} // namespace

std::vector<double> polar_nodes(int d, int n_theta) {
    if (d < 1) throw std::domain_error("polar_nodes: order must be >= 1");
    if (n_theta < d + 1)
        throw std::domain_error("polar_nodes: need n_theta >= d+1, got n_theta=" +
                                std::to_string(n_theta) + " for d=" + std::to_string(d));

    const std::size_t p = static_cast<std::size_t>(n_theta / 2);
    const bool center = (n_theta % 2) != 0;
    const MomentSystem sys{d, n_theta, center};

    std::vector<double> solution;
    bool solved = false;
    for (std::uint64_t attempt = 0; attempt < 64 && !solved; ++attempt) {
        std::vector<double> start(p);
        const double spacing = 1.0 / (static_cast<double>(p) + 1.0);
        SplitMix64 jitter(attempt);
        for (std::size_t j = 0; j < p; ++j) {
            double v = spacing * (static_cast<double>(j) + 1.0);
            if (attempt > 0) v += 0.6 * spacing * (jitter.next_double() - 0.5);
            start[j] = std::min(std::max(v, 1e-3), 1.0 - 1e-3);
        }
        std::vector<double> candidate;
        if (lm_attempt(sys, start, candidate) && nodes_distinct(candidate, center))
            solution = std::move(candidate), solved = true;
    }
    if (!solved)
        throw ConvergenceError("polar node solve failed for d=" + std::to_string(d) +
                               ", n_theta=" + std::to_string(n_theta));

    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(n_theta));
    for (double a : solution) nodes.push_back(a);
    if (center) nodes.push_back(0.0);
    for (double a : solution) nodes.push_back(-a);
    // Descending cos(theta): north to south.
    std::sort(nodes.begin(), nodes.end(), std::greater<>());
    return nodes;
}

Design product_design(const ProductDesignSpec& spec) {
    if (spec.d < 1) throw std::domain_error("product_design: order must be >= 1");
    int n_theta = spec.n_theta;
    if (n_theta == 0) {
        n_theta = default_polar_count(spec.d);
        if (n_theta == 0)
            throw std::domain_error("product_design: no default polar count for d=" +
                                    std::to_string(spec.d) + "; specify n_theta");
    }
    const int min_phi = 2 * spec.d + 1;
    int n_phi = spec.n_phi == 0 ? min_phi : spec.n_phi;
    if (n_phi < min_phi)
        throw std::domain_error("product_design: need n_phi >= 2d+1 = " + std::to_string(min_phi));

    const std::vector<double> nodes = polar_nodes(spec.d, n_theta);
    Design design;
    design.label = "product-d" + std::to_string(spec.d);
    design.points.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    for (double x : nodes) {
        const double theta = std::acos(std::min(std::max(x, -1.0), 1.0));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = spec.alpha + 2.0 * kPi * j / n_phi - kPi;
            design.points.push_back(SpherePoint::from_angles(theta, phi));
        }
    }
    return design;
}

Design product_design(int d, double alpha) {
    return product_design(ProductDesignSpec{d, 0, 0, alpha});
}

} // namespace sphdes
