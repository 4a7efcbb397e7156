#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "failcast/rng.hpp"

namespace failcast::mcmc {

// Proposals walk in a transformed space so every candidate stays inside the
// parameter's support: log for positive quantities, logit for bounded ones.
enum class Transform { Identity, LogPositive, LogitBounded };

struct BlockDef {
  std::string name;
  Transform transform = Transform::Identity;
  double lower = 0.0;  // LogitBounded bounds
  double upper = 1.0;
  std::size_t size = 1;  // >1: latent vector, updated element-wise
};

class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<BlockDef> blocks);

  const std::vector<BlockDef>& blocks() const { return blocks_; }
  std::size_t offset(std::size_t block) const { return offsets_[block]; }
  std::size_t total_size() const { return total_; }
  std::size_t block_index(std::string_view name) const;  // throws out_of_range

 private:
  std::vector<BlockDef> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// A log target density over a flattened state vector.
class Target {
 public:
  virtual ~Target() = default;

  virtual const Layout& layout() const = 0;
  virtual double log_density(std::span<const double> x) const = 0;

  // Terms of the log density that involve coordinate (block, elem), evaluated
  // as if x[offset(block)+elem] held `value`. May omit terms free of that
  // coordinate; the default falls back to the full density.
  virtual double block_log_density(std::span<const double> x, std::size_t block, std::size_t elem,
                                   double value) const;

  // True when element terms of every vector block touch no other element of
  // the same block, which makes element-wise sweeps safe to parallelize.
  virtual bool element_terms_local() const { return false; }

  // Fresh initial state draw (prior draw). Targets without one keep x as-is.
  virtual bool has_init_sampler() const { return false; }
  virtual void draw_init(std::span<double> x, Rng& rng) const { (void)x, (void)rng; }
};

// Adapter for ad-hoc targets in tests.
class FunctionTarget final : public Target {
 public:
  FunctionTarget(Layout layout, std::function<double(std::span<const double>)> log_density)
      : layout_(std::move(layout)), fn_(std::move(log_density)) {}
  const Layout& layout() const override { return layout_; }
  double log_density(std::span<const double> x) const override { return fn_(x); }

 private:
  Layout layout_;
  std::function<double(std::span<const double>)> fn_;
};

struct McmcConfig {
  int n_chains = 4;
  int n_iterations = 20000;
  int burn_in = 10000;
  int thin = 1;
  double target_acceptance = 0.3;
  double initial_scale = 0.1;                    // transformed space
  std::map<std::string, double> initial_scales;  // per-block overrides
  std::uint64_t seed = 0;
  int adapt_interval = 50;

  void validate() const;  // throws ConfigError
};

// Retained samples (scalar blocks only; latent vectors are swept in-chain but
// not stored) plus per-block acceptance rates measured after burn-in.
struct Trace {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<double>>> samples;  // [chain][param][draw]
  std::vector<std::map<std::string, double>> acceptance;  // [chain][block]
  std::size_t retained_per_chain = 0;

  std::size_t param_index(std::string_view name) const;  // throws out_of_range
  std::vector<double> pooled(std::string_view name) const;
};

// Blockwise random-walk Metropolis-Hastings with per-block scale adaptation
// toward target_acceptance during burn-in (frozen afterwards). Acceptance uses
// min(1, exp(delta log-density + transform Jacobian correction)). Chains are
// independent (derived sub-seeds) and may run concurrently; the merged Trace
// is identical for any thread count.
Trace run_mh(const Target& target, std::span<const double> init, const McmcConfig& cfg);

// Initialization via the target's own sampler, retried up to 1000 times until
// the density is finite. Throws NumericalError otherwise.
Trace run_mh(const Target& target, const McmcConfig& cfg);

double posterior_mean(const Trace& trace, std::string_view param);
double posterior_sd(const Trace& trace, std::string_view param);
double acceptance_rate(const Trace& trace, std::string_view block);  // pooled over chains

struct Diagnostics {
  std::map<std::string, double> rhat;  // split rank-normalized R-hat
  std::map<std::string, double> ess;   // bulk effective sample size
};

// Requires n_chains >= 2. Zero-variance parameters report R-hat 1.0 and
// ESS equal to the retained draw count.
Diagnostics diagnostics(const Trace& trace);

void write_trace_csv(const Trace& trace, const std::string& path);

// Standard-normal quantile (Acklam's approximation), used by the
// rank-normalization in diagnostics.
double inverse_normal_cdf(double p);

}  // namespace failcast::mcmc
