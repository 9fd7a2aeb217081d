#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/inference/measurement.hpp"
#include "rsinfer/models/prior.hpp"

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

namespace rsinfer {

// Pin-jointed planar truss, axial bars only. The `horizontal` tag marks the
// chord group whose stiffness the uncertain multiplier E scales; all other
// bars have unit axial stiffness. Loads are vertical point forces
// -load_scale * q at the load nodes.
struct TrussGeometry {
    struct Bar {
        std::size_t a, b;
        bool horizontal;
    };

    std::vector<std::array<double, 2>> nodes;
    std::vector<Bar> bars;
    std::vector<std::size_t> fixed_dofs;    // global dof = 2*node + (0:x, 1:y)
    std::vector<std::size_t> load_nodes;    // carry the vertical load pattern
    std::vector<std::size_t> sensor_nodes;  // vertical dof is measured
    double load_scale = 1.0;
};

struct TrussParams {
    double E = 1.0;  // horizontal-bar stiffness multiplier, > 0
    double q = 1.0;  // load multiplier
};

// 12-panel Pratt bridge deck: 13 bottom nodes with 11 instrumented interior
// ones, pinned left support, roller right support. load_scale is calibrated
// so that unit parameters give deflections of a handful of length units.
TrussGeometry default_truss();

void validate_geometry(const TrussGeometry& g);

// Sensor vertical displacements. Assembles the axial stiffness, removes the
// fixed dofs, solves by dense Cholesky. Linear in q.
Vec solve_displacements(const TrussGeometry& g, const TrussParams& p);

// Forward-model adapter: x = [E, q].
class TrussModel : public ForwardModel {
public:
    explicit TrussModel(TrussGeometry g);
    std::size_t input_dim() const override { return 2; }
    std::size_t output_dim() const override { return geom_.sensor_nodes.size(); }
    const TrussGeometry& geometry() const { return geom_; }

private:
    Vec eval_impl(const Vec& x) const override;
    TrussGeometry geom_;
};

struct VirtualRecord {
    Vec u_true;   // h(x_truth)
    Vec u_tilde;  // perturbed by unit-variance noise
    std::vector<std::pair<double, double>> z;  // resolution intervals
};

// u_tilde = u_true + eps with eps ~ N(0,1) per channel; the observation
// interval is the resolution cell containing u_tilde:
// [floor(u/res)*res, floor(u/res)*res + res].
VirtualRecord generate_virtual_data(const TrussGeometry& g,
                                    const TrussParams& truth,
                                    std::uint64_t noise_seed, double resolution);

// Canonical bridge demo dataset (fixed record, not regenerated). Reference
// data only: the stand-in geometry does not reproduce its u_true.
const VirtualRecord& bridge_demo_data();

// Demo truth x_t = [E, q] and the frozen noise seed behind
// consistent_demo_data().
TrussParams demo_truth();
inline constexpr std::uint64_t kDemoNoiseSeed = 6838;

// Measurement record generated from default_truss() at demo_truth(); the
// dataset the inference demos run on (self-consistent with the solver).
const VirtualRecord& consistent_demo_data();

// Prior for the demo: E as a lognormal-bounded p-box, q as interval evidence.
PriorSpec bridge_demo_prior();

// First `count` observation channels of a record with unit normal noise.
std::vector<Channel> demo_channels(const VirtualRecord& rec, std::size_t count);

// Structured-text geometry file, round-trips exactly.
void write_geometry(const TrussGeometry& g, std::ostream& os);
TrussGeometry read_geometry(std::istream& is);

}  // namespace rsinfer
