#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/core/set_realization.hpp"
#include "rsinfer/models/distribution.hpp"

#include <atomic>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

namespace rsinfer {

// Forward model handle x -> z with an instrumented call counter. The counter
// is how the tests prove the posterior Monte-Carlo stage never touches the
// model.
class ForwardModel {
public:
    virtual ~ForwardModel() = default;

    Vec eval(const Vec& x) const {
        calls_.fetch_add(1, std::memory_order_relaxed);
        return eval_impl(x);
    }

    virtual std::size_t input_dim() const = 0;
    virtual std::size_t output_dim() const = 0;
    // Safe to call from concurrent workers? Callers serialize when false.
    virtual bool reentrant() const { return true; }

    std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
    void reset_call_count() const { calls_.store(0, std::memory_order_relaxed); }

private:
    virtual Vec eval_impl(const Vec& x) const = 0;

    mutable std::atomic<std::uint64_t> calls_{0};
};

class IdentityModel : public ForwardModel {
public:
    explicit IdentityModel(std::size_t dim) : dim_(dim) {}
    std::size_t input_dim() const override { return dim_; }
    std::size_t output_dim() const override { return dim_; }

private:
    Vec eval_impl(const Vec& x) const override { return x; }
    std::size_t dim_;
};

// Convenience wrapper for tests and small demos.
class CallableModel : public ForwardModel {
public:
    CallableModel(std::size_t in, std::size_t out, std::function<Vec(const Vec&)> f)
        : in_(in), out_(out), f_(std::move(f)) {}
    std::size_t input_dim() const override { return in_; }
    std::size_t output_dim() const override { return out_; }

private:
    Vec eval_impl(const Vec& x) const override { return f_(x); }
    std::size_t in_, out_;
    std::function<Vec(const Vec&)> f_;
};

// Restricts a model to a subset of its output channels (e.g. one sensor of
// many). The inner model still runs in full.
class SelectorModel : public ForwardModel {
public:
    SelectorModel(std::shared_ptr<const ForwardModel> inner,
                  std::vector<std::size_t> idx);
    std::size_t input_dim() const override { return inner_->input_dim(); }
    std::size_t output_dim() const override { return idx_.size(); }
    bool reentrant() const override { return inner_->reentrant(); }

private:
    Vec eval_impl(const Vec& x) const override;
    std::shared_ptr<const ForwardModel> inner_;
    std::vector<std::size_t> idx_;
};

// One observation channel: interval datum plus the zero-mean noise law.
struct Channel {
    double z_lo, z_hi;
    Distribution noise;
};

struct MeasurementModel {
    std::shared_ptr<const ForwardModel> forward;
    std::vector<Channel> channels;

    MeasurementModel(std::shared_ptr<const ForwardModel> fwd, std::vector<Channel> ch);
    std::size_t m() const { return channels.size(); }
};

// x in X^d(omega) = {x : h(x) + eps in Z}; evaluates the forward model.
bool data_set_membership(const MeasurementModel& mm, const Vec& eps, const Vec& x);
// Same predicate against a stored response h(x) (no forward call).
bool response_membership(const MeasurementModel& mm, const Vec& eps, const Vec& z);

// L(x) = prod_i P(h(x)_i + eps_i in Z_i), in [0,1].
double likelihood(const MeasurementModel& mm, const Vec& x);
double likelihood_response(const MeasurementModel& mm, const Vec& z);
double log_likelihood_response(const MeasurementModel& mm, const Vec& z);

// x in X(omega) intersect X^d(omega).
bool posterior_membership(const SetRealization& prior_realization,
                          const MeasurementModel& mm, const Vec& eps, const Vec& x);

// One record per channel: channel,z_lo,z_hi,noise_family,noise_scale.
// Scale is the standard deviation for normal noise, the half width for
// uniform noise.
std::vector<Channel> read_measurements_csv(std::istream& is);
void write_measurements_csv(const std::vector<Channel>& ch, std::ostream& os);

}  // namespace rsinfer
