#include "rsinfer/truss/truss_model.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace rsinfer {

namespace {

// Calibrated so the demo truth gives a peak deflection of about six length
// units, matching the scale of the reference record below under a unit
// sensing resolution.
constexpr double kDemoLoadScale = 0.0105;

constexpr std::size_t kPanels = 12;

std::size_t top_node(std::size_t i) { return kPanels + i; }  // i in 1..11

}  // namespace

TrussGeometry default_truss() {
    TrussGeometry g;
    for (std::size_t i = 0; i <= kPanels; ++i)
        g.nodes.push_back({static_cast<double>(i), 0.0});
    for (std::size_t i = 1; i < kPanels; ++i)
        g.nodes.push_back({static_cast<double>(i), 1.0});

    for (std::size_t i = 0; i < kPanels; ++i) g.bars.push_back({i, i + 1, true});
    for (std::size_t i = 1; i + 1 < kPanels; ++i)
        g.bars.push_back({top_node(i), top_node(i + 1), true});
    for (std::size_t i = 1; i < kPanels; ++i) g.bars.push_back({i, top_node(i), false});
    // Diagonals: end posts plus a web sloping down toward midspan, leaving
    // the center panel open. Statically determinate: 45 bars + 3 reactions
    // for 24 free joints.
    g.bars.push_back({0, top_node(1), false});
    g.bars.push_back({kPanels, top_node(kPanels - 1), false});
    for (std::size_t i = 1; i <= 5; ++i) g.bars.push_back({top_node(i), i + 1, false});
    for (std::size_t i = 7; i < kPanels; ++i) g.bars.push_back({top_node(i), i - 1, false});

    g.fixed_dofs = {0, 1, 2 * kPanels + 1};  // pin at node 0, roller at node 12
    for (std::size_t i = 1; i < kPanels; ++i) {
        g.load_nodes.push_back(i);
        g.sensor_nodes.push_back(i);
    }
    g.load_scale = kDemoLoadScale;
    return g;
}

void validate_geometry(const TrussGeometry& g) {
    if (g.nodes.size() < 2) throw ConfigError("truss needs at least two nodes");
    if (g.bars.empty()) throw ConfigError("truss has no bars");
    const std::size_t n = g.nodes.size();
    for (const TrussGeometry::Bar& b : g.bars) {
        if (b.a >= n || b.b >= n)
            throw ConfigError("bar references a node that does not exist");
        if (b.a == b.b) throw ConfigError("bar connects a node to itself");
        const double dx = g.nodes[b.b][0] - g.nodes[b.a][0];
        const double dy = g.nodes[b.b][1] - g.nodes[b.a][1];
        if (!(std::hypot(dx, dy) > 0.0)) throw ConfigError("zero-length bar");
    }
    if (g.fixed_dofs.empty()) throw ConfigError("no fixed dofs; structure floats");
    std::unordered_set<std::size_t> seen;
    for (std::size_t d : g.fixed_dofs) {
        if (d >= 2 * n) throw ConfigError("fixed dof out of range");
        if (!seen.insert(d).second) throw ConfigError("duplicate fixed dof");
    }
    for (std::size_t v : g.load_nodes)
        if (v >= n) throw ConfigError("load node out of range");
    if (g.sensor_nodes.empty()) throw ConfigError("no sensor nodes");
    for (std::size_t v : g.sensor_nodes)
        if (v >= n) throw ConfigError("sensor node out of range");
    if (!(g.load_scale > 0.0) || !std::isfinite(g.load_scale))
        throw ConfigError("load_scale must be positive and finite");
}

Vec solve_displacements(const TrussGeometry& g, const TrussParams& p) {
    validate_geometry(g);
    if (!(p.E > 0.0) || !std::isfinite(p.E))
        throw ConfigError("stiffness multiplier E must be positive");
    if (!std::isfinite(p.q)) throw ConfigError("load multiplier q must be finite");

    const std::size_t ndof = 2 * g.nodes.size();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ndof),
                                              static_cast<Eigen::Index>(ndof));
    for (const TrussGeometry::Bar& bar : g.bars) {
        const double dx = g.nodes[bar.b][0] - g.nodes[bar.a][0];
        const double dy = g.nodes[bar.b][1] - g.nodes[bar.a][1];
        const double len = std::hypot(dx, dy);
        const double k = (bar.horizontal ? p.E : 1.0) / len;  // EA/L, unit areas
        const double c = dx / len, s = dy / len;
        const double m[2][2] = {{c * c, c * s}, {c * s, s * s}};
        const Eigen::Index dof[4] = {
            static_cast<Eigen::Index>(2 * bar.a), static_cast<Eigen::Index>(2 * bar.a + 1),
            static_cast<Eigen::Index>(2 * bar.b), static_cast<Eigen::Index>(2 * bar.b + 1)};
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col) {
                const double sign = ((r < 2) == (col < 2)) ? 1.0 : -1.0;
                K(dof[r], dof[col]) += sign * k * m[r % 2][col % 2];
            }
    }

    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ndof));
    for (std::size_t v : g.load_nodes)
        f(static_cast<Eigen::Index>(2 * v + 1)) -= g.load_scale * p.q;

    std::vector<char> is_fixed(ndof, 0);
    for (std::size_t d : g.fixed_dofs) is_fixed[d] = 1;
    std::vector<Eigen::Index> free_dofs;
    for (std::size_t d = 0; d < ndof; ++d)
        if (!is_fixed[d]) free_dofs.push_back(static_cast<Eigen::Index>(d));

    const Eigen::Index nf = static_cast<Eigen::Index>(free_dofs.size());
    Eigen::MatrixXd kr(nf, nf);
    Eigen::VectorXd fr(nf);
    for (Eigen::Index r = 0; r < nf; ++r) {
        fr(r) = f(free_dofs[static_cast<std::size_t>(r)]);
        for (Eigen::Index col = 0; col < nf; ++col)
            kr(r, col) = K(free_dofs[static_cast<std::size_t>(r)],
                           free_dofs[static_cast<std::size_t>(col)]);
    }

    Eigen::LLT<Eigen::MatrixXd> llt(kr);
    if (llt.info() != Eigen::Success)
        throw NumericalError("constrained stiffness matrix is not positive definite");
    const Eigen::VectorXd ur = llt.solve(fr);
    if (!ur.allFinite())
        throw NumericalError("displacement solve produced non-finite values");

    Vec full(ndof, 0.0);
    for (Eigen::Index r = 0; r < nf; ++r)
        full[static_cast<std::size_t>(free_dofs[static_cast<std::size_t>(r)])] = ur(r);

    Vec out;
    out.reserve(g.sensor_nodes.size());
    for (std::size_t v : g.sensor_nodes) out.push_back(full[2 * v + 1]);
    return out;
}

TrussModel::TrussModel(TrussGeometry g) : geom_(std::move(g)) {
    validate_geometry(geom_);
}

Vec TrussModel::eval_impl(const Vec& x) const {
    if (x.size() != 2) throw ConfigError("truss model expects x = [E, q]");
    return solve_displacements(geom_, TrussParams{x[0], x[1]});
}

VirtualRecord generate_virtual_data(const TrussGeometry& g,
                                    const TrussParams& truth,
                                    std::uint64_t noise_seed, double resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw ConfigError("sensing resolution must be positive");
    VirtualRecord rec;
    rec.u_true = solve_displacements(g, truth);
    Rng rng(noise_seed);
    rec.u_tilde.reserve(rec.u_true.size());
    for (double u : rec.u_true) {
        const double ut = u + rng.normal();
        rec.u_tilde.push_back(ut);
        const double lo = std::floor(ut / resolution) * resolution;
        rec.z.emplace_back(lo, lo + resolution);
    }
    return rec;
}

// Frozen reference record for the bridge demo: true sensor displacements,
// their perturbed values, and the unit-resolution observation intervals.
// These numbers are fixed validation/display data; the stand-in geometry of
// default_truss() does not reproduce u_true, so inference demos use
// consistent_demo_data() instead.
const VirtualRecord& bridge_demo_data() {
    static const VirtualRecord rec = [] {
        VirtualRecord r;
        r.u_true = {-4.3959, -5.9547, -5.3349, -3.8462, -1.9231, -2.5000,
                    -5.7488, 5.7263,  -4.6177, -2.8575, -0.8801};
        r.u_tilde = {-5.2414, -5.7764, -6.1868, -2.9703, -3.8885, -0.7187,
                     -6.7999, -7.0940, -4.5517, -2.0691, 0.9171};
        r.z = {{-6, -5}, {-6, -5}, {-7, -6}, {-3, -2}, {-4, -3}, {-1, 0},
               {-7, -6}, {-8, -7}, {-5, -4}, {-3, -2}, {0, 1}};
        return r;
    }();
    return rec;
}

TrussParams demo_truth() { return TrussParams{1.0, 0.95}; }

const VirtualRecord& consistent_demo_data() {
    static const VirtualRecord rec =
        generate_virtual_data(default_truss(), demo_truth(), kDemoNoiseSeed, 1.0);
    return rec;
}

PriorSpec bridge_demo_prior() {
    PBoxDim e{Distribution::lognormal(0.9, 0.1), Distribution::lognormal(1.0, 0.11)};
    MassFunction q({SetRealization::interval(0.77, 0.92),
                    SetRealization::interval(0.85, 0.98),
                    SetRealization::interval(0.96, 1.08)},
                   {0.3, 0.3, 0.4});
    std::vector<PriorDim> dims;
    dims.emplace_back(std::move(e));
    dims.emplace_back(std::move(q));
    return PriorSpec(std::move(dims));
}

std::vector<Channel> demo_channels(const VirtualRecord& rec, std::size_t count) {
    if (count == 0) throw ConfigError("need at least one measurement channel");
    if (count > rec.z.size())
        throw ConfigError("record has only " + std::to_string(rec.z.size()) +
                          " channels");
    std::vector<Channel> ch;
    ch.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        ch.push_back({rec.z[i].first, rec.z[i].second, Distribution::normal(0.0, 1.0)});
    return ch;
}

namespace {

void put_double(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

std::string next_token(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok))
        throw ConfigError(std::string("geometry file ended while reading ") + what);
    return tok;
}

double read_double(std::istream& is, const char* what) {
    const std::string tok = next_token(is, what);
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("bad number '") + tok + "' for " + what);
    }
}

std::size_t read_index(std::istream& is, const char* what) {
    const std::string tok = next_token(is, what);
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError(std::string("bad index '") + tok + "' for " + what);
    }
}

void expect_keyword(std::istream& is, const char* kw) {
    const std::string tok = next_token(is, kw);
    if (tok != kw)
        throw ConfigError(std::string("expected '") + kw + "' in geometry file, got '" +
                          tok + "'");
}

}  // namespace

void write_geometry(const TrussGeometry& g, std::ostream& os) {
    validate_geometry(g);
    os << "truss-geometry v1\n";
    os << "load_scale ";
    put_double(os, g.load_scale);
    os << "\n";
    os << "nodes " << g.nodes.size() << "\n";
    for (const auto& nd : g.nodes) {
        put_double(os, nd[0]);
        os << " ";
        put_double(os, nd[1]);
        os << "\n";
    }
    os << "bars " << g.bars.size() << "\n";
    for (const TrussGeometry::Bar& b : g.bars)
        os << b.a << " " << b.b << " " << (b.horizontal ? "horizontal" : "other")
           << "\n";
    os << "fixed " << g.fixed_dofs.size() << "\n";
    for (std::size_t i = 0; i < g.fixed_dofs.size(); ++i)
        os << g.fixed_dofs[i] << (i + 1 == g.fixed_dofs.size() ? "\n" : " ");
    os << "loads " << g.load_nodes.size() << "\n";
    for (std::size_t i = 0; i < g.load_nodes.size(); ++i)
        os << g.load_nodes[i] << (i + 1 == g.load_nodes.size() ? "\n" : " ");
    os << "sensors " << g.sensor_nodes.size() << "\n";
    for (std::size_t i = 0; i < g.sensor_nodes.size(); ++i)
        os << g.sensor_nodes[i] << (i + 1 == g.sensor_nodes.size() ? "\n" : " ");
}

TrussGeometry read_geometry(std::istream& is) {
    expect_keyword(is, "truss-geometry");
    expect_keyword(is, "v1");
    TrussGeometry g;
    expect_keyword(is, "load_scale");
    g.load_scale = read_double(is, "load_scale");
    expect_keyword(is, "nodes");
    const std::size_t nn = read_index(is, "node count");
    for (std::size_t i = 0; i < nn; ++i) {
        const double x = read_double(is, "node x");
        const double y = read_double(is, "node y");
        g.nodes.push_back({x, y});
    }
    expect_keyword(is, "bars");
    const std::size_t nb = read_index(is, "bar count");
    for (std::size_t i = 0; i < nb; ++i) {
        TrussGeometry::Bar b{};
        b.a = read_index(is, "bar node a");
        b.b = read_index(is, "bar node b");
        const std::string tag = next_token(is, "bar group tag");
        if (tag == "horizontal")
            b.horizontal = true;
        else if (tag == "other")
            b.horizontal = false;
        else
            throw ConfigError("unknown bar group tag '" + tag + "'");
        g.bars.push_back(b);
    }
    expect_keyword(is, "fixed");
    const std::size_t nfx = read_index(is, "fixed dof count");
    for (std::size_t i = 0; i < nfx; ++i)
        g.fixed_dofs.push_back(read_index(is, "fixed dof"));
    expect_keyword(is, "loads");
    const std::size_t nl = read_index(is, "load node count");
    for (std::size_t i = 0; i < nl; ++i)
        g.load_nodes.push_back(read_index(is, "load node"));
    expect_keyword(is, "sensors");
    const std::size_t ns = read_index(is, "sensor node count");
    for (std::size_t i = 0; i < ns; ++i)
        g.sensor_nodes.push_back(read_index(is, "sensor node"));
    validate_geometry(g);
    return g;
}

}  // namespace rsinfer
