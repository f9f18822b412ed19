// Copyright 2026 The divlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVLAB_CONVEXITY_HPP
#define DIVLAB_CONVEXITY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "divlab/channels.hpp"
#include "divlab/divergences.hpp"
#include "divlab/io.hpp"
#include "divlab/matrix.hpp"
#include "divlab/parallel.hpp"
#include "json.hpp"

namespace divlab {

//=========================================================================
// Region classification
//=========================================================================

enum class RegionKind { ConcaveKnown, ConvexKnown, ConjecturedConvex, NotConvexNotConcave, Unclassified };

inline const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::ConcaveKnown: return "ConcaveKnown";
    case RegionKind::ConvexKnown: return "ConvexKnown";
    case RegionKind::ConjecturedConvex: return "ConjecturedConvex";
    case RegionKind::NotConvexNotConcave: return "NotConvexNotConcave";
    case RegionKind::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

struct RegionLabel {
  RegionKind kind = RegionKind::Unclassified;
  std::string citation;

  bool known() const { return kind == RegionKind::ConcaveKnown || kind == RegionKind::ConvexKnown; }
  bool operator==(const RegionLabel&) const = default;
};

namespace detail {

// Boundary comparisons with relative slack, so that points such as
// s = 1/(2+q) computed in floating point land on the closed side.
inline double slack(double b) { return tolerances().boundary_rel * std::max(1.0, std::abs(b)); }
inline bool le(double a, double b) { return a <= b + slack(b); }
inline bool ge(double a, double b) { return a >= b - slack(b); }
inline bool eq(double a, double b) { return std::abs(a - b) <= slack(b); }

inline void check_exponents(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) throw InvalidArgument("exponents must be finite");
}

}  // namespace detail

/// Reduces (p, q, s) to p >= q, s > 0 using (p,q,s) ~ (-p,-q,-s) and p <-> q.
inline ParamPoint normalize(ParamPoint pt) {
  if (pt.s < 0.0) pt = {-pt.p, -pt.q, -pt.s};
  if (pt.p < pt.q) std::swap(pt.p, pt.q);
  return pt;
}

/// Known and conjectured convexity regions of Psi_{p,q,s}.
inline RegionLabel classify(double p, double q, double s) {
  using detail::eq;
  using detail::ge;
  using detail::le;
  detail::check_exponents({p, q, s});
  if (s == 0.0) throw InvalidArgument("classify: s must be nonzero");
  const ParamPoint n = normalize({p, q, s});
  p = n.p;
  q = n.q;
  s = n.s;

  if (ge(q, 0.0) && le(p, 1.0) && (p + q <= 0.0 || le(s, 1.0 / (p + q))))
    return {RegionKind::ConcaveKnown, "Theorem-2(1)"};
  if (ge(q, -1.0) && le(p, 0.0)) return {RegionKind::ConvexKnown, "Theorem-2(2)"};

  if (ge(p, 1.0) && le(p, 2.0) && ge(q, -1.0) && le(q, 0.0)) {
    if (eq(p, 2.0)) {
      if (ge(s, 1.0 / (2.0 + q))) return {RegionKind::ConvexKnown, "Theorem-2(3)"};
    } else {
      // At p = 1 (or q = -1) the corresponding term is infinite.
      constexpr double inf = std::numeric_limits<double>::infinity();
      const double t1 = p - 1.0 > detail::slack(1.0) ? 1.0 / (p - 1.0) : inf;
      const double t2 = q + 1.0 > detail::slack(1.0) ? 1.0 / (q + 1.0) : inf;
      const double threshold = std::min(t1, t2);
      if (std::isfinite(threshold) && ge(s, threshold)) return {RegionKind::ConvexKnown, "Theorem-2(3)"};
    }
    if (eq(s, 1.0) && ge(p + q, 1.0)) return {RegionKind::ConvexKnown, "Ando-s=1"};
    // q = 0: Psi does not depend on B and reduces to the one-variable case.
    if (eq(q, 0.0) && ge(s, 1.0 / p)) return {RegionKind::ConvexKnown, "Proposition-5(3)"};
    if (q < 0.0 && !(eq(p, 1.0) && eq(q, -1.0)) && ge(s, 1.0 / (p + q)))
      return {RegionKind::ConjecturedConvex, "Conjecture-2"};
  }
  // Outside both necessary regions. Every remaining finite point lands here.
  return {RegionKind::NotConvexNotConcave, "Proposition-3"};
}

inline RegionLabel classify(const ParamPoint& pt) { return classify(pt.p, pt.q, pt.s); }

/// Convexity regions of Upsilon_{p,s}(A) = Tr (K* A^p K)^s.
inline RegionLabel classify_upsilon(double p, double s) {
  using detail::ge;
  using detail::le;
  detail::check_exponents({p, s});
  if (s == 0.0) throw InvalidArgument("classify_upsilon: s must be nonzero");
  if (s < 0.0) {
    p = -p;
    s = -s;
  }
  if (ge(p, 0.0) && le(p, 1.0) && (p <= 0.0 || le(s, 1.0 / p))) return {RegionKind::ConcaveKnown, "Proposition-5(1)"};
  if (ge(p, -1.0) && le(p, 0.0)) return {RegionKind::ConvexKnown, "Proposition-5(2)"};
  if (ge(p, 1.0) && le(p, 2.0) && ge(s, 1.0 / p)) return {RegionKind::ConvexKnown, "Proposition-5(3)"};
  return {RegionKind::NotConvexNotConcave, "Proposition-6"};
}

//=========================================================================
// Functionals under test
//=========================================================================

enum class Direction { Convex, Concave, Monotone };

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::Convex: return "convex";
    case Direction::Concave: return "concave";
    case Direction::Monotone: return "monotone";
  }
  return "convex";
}

inline Direction direction_from_string(const std::string& s) {
  if (s == "convex") return Direction::Convex;
  if (s == "concave") return Direction::Concave;
  if (s == "monotone") return Direction::Monotone;
  throw InvalidArgument("direction must be 'convex' or 'concave', got '" + s + "'");
}

/// F(A, B; K) plus enough metadata to rebuild it from a witness file.
struct JointFunctional {
  using Eval = std::function<double(const PositiveDefiniteMatrix&, const PositiveDefiniteMatrix&, const ComplexMatrix&)>;

  nlohmann::json spec;  // {"name": ..., parameters}
  Eval eval;
  bool random_k = true;                    // draw K from Ginibre, else K = I
  std::optional<ParamPoint> embedding;     // set for Psi: enables the block cross-check
};

inline JointFunctional psi_functional(const ParamPoint& pt, bool random_k = true) {
  detail::check_exponents({pt.p, pt.q, pt.s});
  JointFunctional f;
  f.spec = {{"name", "psi"}, {"p", pt.p}, {"q", pt.q}, {"s", pt.s}};
  f.eval = [pt](const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, const ComplexMatrix& k) {
    return psi(a, b, k, pt);
  };
  f.random_k = random_k;
  f.embedding = pt;
  return f;
}

inline JointFunctional hiai_joint_functional(double p, double q, double t, bool random_k = true) {
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0 || !(p + q > 0.0) || !(t > 0.0))
    throw InvalidArgument("hiai functional needs 0 <= p, q <= 1, p + q > 0, t > 0");
  JointFunctional f;
  f.spec = {{"name", "hiai"}, {"p", p}, {"q", q}, {"t", t}};
  f.eval = [p, q, t](const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, const ComplexMatrix& k) {
    return hiai_functional(a, b, k, p, q, t);
  };
  f.random_k = random_k;
  return f;
}

/// Upsilon_{p,s}(A); the B argument is ignored.
inline JointFunctional upsilon_functional(double p, double s, bool random_k = true) {
  detail::check_exponents({p, s});
  if (s == 0.0) throw InvalidArgument("upsilon: s must be nonzero");
  JointFunctional f;
  f.spec = {{"name", "upsilon"}, {"p", p}, {"s", s}};
  f.eval = [p, s](const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix&, const ComplexMatrix& k) {
    return upsilon(a, k, p, s);
  };
  f.random_k = random_k;
  return f;
}

inline JointFunctional functional_from_json(const nlohmann::json& j) {
  const std::string name = j.value("name", "");
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number())
      throw InvalidArgument(std::string("functional: field '") + key + "' must be a number");
    return j[key].get<double>();
  };
  if (name == "psi") return psi_functional({num("p"), num("q"), num("s")});
  if (name == "hiai") return hiai_joint_functional(num("p"), num("q"), num("t"));
  if (name == "upsilon") return upsilon_functional(num("p"), num("s"));
  throw InvalidArgument("functional: unknown name '" + name + "'");
}

//=========================================================================
// Probe reports and witnesses
//=========================================================================

/// Outcome of a randomized probe. Margins are signed so that a positive
/// value is evidence against the probed property.
struct ProbeReport {
  nlohmann::json functional;
  Direction direction = Direction::Convex;
  int dim = 0;
  std::uint64_t seed = 0;
  long samples = 0;
  long violations = 0;
  long skipped = 0;  // e.g. infinite divergences in DPI probes
  double worst_margin = -std::numeric_limits<double>::infinity();
  bool certified = false;
  nlohmann::json witness;  // null when no sample was evaluated

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["functional"] = functional;
    j["direction"] = to_string(direction);
    j["dim"] = dim;
    j["seed"] = seed;
    j["samples"] = samples;
    j["violations"] = violations;
    j["skipped"] = skipped;
    j["worst_margin"] = std::isfinite(worst_margin) ? nlohmann::json(worst_margin) : nlohmann::json(nullptr);
    j["certified"] = certified;
    j["witness"] = witness;
    return j;
  }
};

inline double violation_threshold(double f0, double f1) {
  return tolerances().violation_rel * std::max({std::abs(f0), std::abs(f1), 1.0});
}

namespace detail {

inline PositiveDefiniteMatrix mix(const PositiveDefiniteMatrix& x0, const PositiveDefiniteMatrix& x1, double theta) {
  return PositiveDefiniteMatrix(HermitianMatrix::symmetrize((1.0 - theta) * x0.matrix() + theta * x1.matrix()));
}

struct MidpointEval {
  double f0, f1, fmid, margin;
};

inline MidpointEval midpoint_margin(const JointFunctional& f, Direction dir, double theta,
                                    const PositiveDefiniteMatrix& a0, const PositiveDefiniteMatrix& a1,
                                    const PositiveDefiniteMatrix& b0, const PositiveDefiniteMatrix& b1,
                                    const ComplexMatrix& k) {
  MidpointEval e;
  e.f0 = f.eval(a0, b0, k);
  e.f1 = f.eval(a1, b1, k);
  e.fmid = f.eval(mix(a0, a1, theta), mix(b0, b1, theta), k);
  const double chord = (1.0 - theta) * e.f0 + theta * e.f1;
  e.margin = dir == Direction::Concave ? chord - e.fmid : e.fmid - chord;
  return e;
}

inline nlohmann::json joint_witness(const JointFunctional& f, Direction dir, double theta,
                                    const PositiveDefiniteMatrix& a0, const PositiveDefiniteMatrix& a1,
                                    const PositiveDefiniteMatrix& b0, const PositiveDefiniteMatrix& b1,
                                    const ComplexMatrix& k, const MidpointEval& e) {
  return {{"kind", "joint"},
          {"functional", f.spec},
          {"direction", to_string(dir)},
          {"theta", theta},
          {"A0", matrix_to_json(a0.matrix())},
          {"A1", matrix_to_json(a1.matrix())},
          {"B0", matrix_to_json(b0.matrix())},
          {"B1", matrix_to_json(b1.matrix())},
          {"K", matrix_to_json(k)},
          {"F0", e.f0},
          {"F1", e.f1},
          {"Fmid", e.fmid},
          {"margin", e.margin}};
}

[[noreturn]] inline void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string msg = std::string(e.what()) + " [" + context + "]";
  if (dynamic_cast<const DomainError*>(&e)) throw DomainError(msg);
  if (dynamic_cast<const InvalidArgument*>(&e)) throw InvalidArgument(msg);
  if (dynamic_cast<const ConvergenceError*>(&e)) throw ConvergenceError(msg);
  if (dynamic_cast<const InvariantViolation*>(&e)) throw InvariantViolation(msg);
  throw NumericalFailure(msg);
}

}  // namespace detail

/// Recomputes the margin of a serialized midpoint witness from its matrices.
inline double reevaluate_joint_witness(const nlohmann::json& w,
                                       const std::optional<JointFunctional>& functional = std::nullopt) {
  if (w.value("kind", "") != "joint") throw InvalidArgument("witness: expected kind 'joint'");
  const JointFunctional f = functional ? *functional : functional_from_json(w.at("functional"));
  auto pd = [&](const char* key) { return PositiveDefiniteMatrix(HermitianMatrix(matrix_from_json(w.at(key)))); };
  const auto e = detail::midpoint_margin(f, direction_from_string(w.at("direction").get<std::string>()),
                                         w.at("theta").get<double>(), pd("A0"), pd("A1"), pd("B0"), pd("B1"),
                                         matrix_from_json(w.at("K")));
  return e.margin;
}

//=========================================================================
// Joint convexity probe
//=========================================================================

struct ProbeConfig {
  int dim = 3;
  long samples = 500;
  std::uint64_t seed = 0;
  double theta = 0.5;
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
  int cross_check_every = 10;  // block-embedding check on every n-th sample; 0 disables
};

/// Randomized midpoint test of joint convexity (or concavity) of F.
/// Sample i draws from the stream derive(seed, i), so any sample can be
/// regenerated on its own.
inline ProbeReport probe_joint(const JointFunctional& f, Direction dir, const ProbeConfig& cfg) {
  if (cfg.dim < 1) throw InvalidArgument("probe_joint: dim must be >= 1");
  if (cfg.samples < 0) throw InvalidArgument("probe_joint: samples must be >= 0");
  if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0)) throw InvalidArgument("probe_joint: theta must lie in [0, 1]");
  if (dir == Direction::Monotone) throw InvalidArgument("probe_joint: direction must be convex or concave");
  ProbeReport rep;
  rep.functional = f.spec;
  rep.direction = dir;
  rep.dim = cfg.dim;
  rep.seed = cfg.seed;
  const Eigen::Index n = cfg.dim;
  for (long i = 0; i < cfg.samples; ++i) {
    CounterRng rng(CounterRng::derive(cfg.seed, std::uint64_t(i)));
    const auto a0 = random_positive_definite(n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    const auto a1 = random_positive_definite(n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    const auto b0 = random_positive_definite(n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    const auto b1 = random_positive_definite(n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    const ComplexMatrix k = f.random_k ? random_ginibre(n, n, rng) : identity(n);
    detail::MidpointEval e;
    try {
      e = detail::midpoint_margin(f, dir, cfg.theta, a0, a1, b0, b1, k);
      if (f.embedding && cfg.cross_check_every > 0 && i % cfg.cross_check_every == 0) {
        const double via_block = psi_block_embedding(a0, b0, k, *f.embedding);
        if (std::abs(via_block - e.f0) > tolerances().block_embedding_rel * std::max(1.0, std::abs(e.f0)))
          throw NumericalFailure("block embedding disagrees with direct evaluation: " + format_double(via_block) +
                                 " vs " + format_double(e.f0));
      }
    } catch (const Error& err) {
      detail::rethrow_with_context(err, "sample " + std::to_string(i) + " of seed " + std::to_string(cfg.seed));
    }
    ++rep.samples;
    if (e.margin > violation_threshold(e.f0, e.f1)) ++rep.violations;
    if (e.margin > rep.worst_margin) {
      rep.worst_margin = e.margin;
      rep.witness = detail::joint_witness(f, dir, cfg.theta, a0, a1, b0, b1, k, e);
    }
  }
  return rep;
}

//=========================================================================
// Line second differences
//=========================================================================

/// Segment xi -> (C + xi G, D + xi H) through the positive definite cone.
struct LineProbe {
  ComplexMatrix c, d, g, h;
  std::vector<double> xi;
};

using PairFunctional = std::function<double(const PositiveDefiniteMatrix&, const PositiveDefiniteMatrix&)>;

/// C, D with spectrum in [0.5, 2]; directions of spectral norm 0.2; xi in
/// {-1, -0.5, 0, 0.5, 1}. Every point with |xi| <= 1.5 stays positive definite.
inline LineProbe random_line_probe(Eigen::Index dim, CounterRng& rng) {
  auto direction = [&]() {
    const HermitianMatrix g = random_hermitian(dim, rng);
    const Spectrum sp = eig_hermitian(g);
    const double norm = std::max(std::abs(sp.min()), std::abs(sp.max()));
    return ComplexMatrix(g.matrix() * (0.2 / norm));
  };
  LineProbe lp;
  lp.c = random_positive_definite(dim, 0.5, 2.0, rng).matrix();
  lp.d = random_positive_definite(dim, 0.5, 2.0, rng).matrix();
  lp.g = direction();
  lp.h = direction();
  lp.xi = {-1.0, -0.5, 0.0, 0.5, 1.0};
  return lp;
}

/// [F(xi-h) - 2F(xi) + F(xi+h)] / h^2 along the segment, one value per xi.
inline std::vector<double> probe_line_second_difference(const PairFunctional& f, const LineProbe& lp, double h) {
  if (!(h > 0.0)) throw InvalidArgument("line probe: h must be positive");
  auto at = [&](double x) {
    try {
      return f(PositiveDefiniteMatrix(HermitianMatrix::symmetrize(lp.c + x * lp.g)),
               PositiveDefiniteMatrix(HermitianMatrix::symmetrize(lp.d + x * lp.h)));
    } catch (const InvariantViolation&) {
      throw InvalidArgument("line probe: positivity window violated at xi = " + format_double(x));
    }
  };
  std::vector<double> out;
  for (double x : lp.xi) out.push_back((at(x - h) - 2.0 * at(x) + at(x + h)) / (h * h));
  return out;
}

//=========================================================================
// Data processing probe
//=========================================================================

struct DpiConfig {
  int dim = 2;
  int channels = 100;
  int state_pairs = 100;
  std::uint64_t seed = 0;
};

/// Channel c of a DPI probe: even c is a random Stinespring channel with
/// environment dimension cycling through 2..dim+1, odd c is depolarizing.
inline KrausChannel dpi_channel(const DpiConfig& cfg, int c) {
  CounterRng rng(CounterRng::derive_path(cfg.seed, {0, std::uint64_t(c)}));
  if (c % 2 == 0) return random_cptp(cfg.dim, 2 + (c / 2) % cfg.dim, rng);
  return depolarizing(cfg.dim, rng.uniform(0.05, 0.95));
}

inline std::pair<DensityMatrix, DensityMatrix> dpi_state_pair(const DpiConfig& cfg, int j) {
  CounterRng rng(CounterRng::derive_path(cfg.seed, {1, std::uint64_t(j)}));
  DensityMatrix rho = random_density(cfg.dim, cfg.dim, rng);
  DensityMatrix sigma = random_density(cfg.dim, cfg.dim, rng);
  return {std::move(rho), std::move(sigma)};
}

namespace detail {

inline nlohmann::json dpi_witness(double alpha, double z, const KrausChannel& ch, const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double d_in, double d_out, double margin) {
  return {{"kind", "dpi"},
          {"alpha", alpha},
          {"z", z},
          {"channel", channel_to_json(ch)},
          {"rho", matrix_to_json(rho.matrix())},
          {"sigma", matrix_to_json(sigma.matrix())},
          {"D_in", d_in},
          {"D_out", d_out},
          {"margin", margin}};
}

}  // namespace detail

/// Every channel is applied to every state pair; margin = D(E rho||E sigma) - D(rho||sigma).
inline ProbeReport probe_dpi(double alpha, double z, const DpiConfig& cfg) {
  detail::check_alpha_z(alpha, z);
  if (cfg.dim < 1 || cfg.channels < 0 || cfg.state_pairs < 0)
    throw InvalidArgument("probe_dpi: dim must be >= 1 and counts >= 0");
  ProbeReport rep;
  rep.functional = {{"name", "d_alpha_z"}, {"alpha", alpha}, {"z", z}};
  rep.direction = Direction::Monotone;
  rep.dim = cfg.dim;
  rep.seed = cfg.seed;
  std::vector<std::pair<DensityMatrix, DensityMatrix>> pairs;
  std::vector<DivergenceValue> d_in;
  for (int j = 0; j < cfg.state_pairs; ++j) {
    pairs.push_back(dpi_state_pair(cfg, j));
    d_in.push_back(d_alpha_z(pairs.back().first, pairs.back().second, alpha, z));
  }
  for (int c = 0; c < cfg.channels; ++c) {
    const KrausChannel ch = dpi_channel(cfg, c);
    for (int j = 0; j < cfg.state_pairs; ++j) {
      const auto& [rho, sigma] = pairs[std::size_t(j)];
      DivergenceValue out;
      try {
        out = d_alpha_z(apply(ch, rho), apply(ch, sigma), alpha, z);
      } catch (const Error& err) {
        detail::rethrow_with_context(err, "channel " + std::to_string(c) + ", pair " + std::to_string(j));
      }
      if (!d_in[std::size_t(j)].finite || !out.finite) {
        ++rep.skipped;
        continue;
      }
      const double din = d_in[std::size_t(j)].value;
      const double margin = out.value - din;
      ++rep.samples;
      if (margin > tolerances().violation_rel * std::max(1.0, std::abs(din))) ++rep.violations;
      if (margin > rep.worst_margin) {
        rep.worst_margin = margin;
        rep.witness = detail::dpi_witness(alpha, z, ch, rho, sigma, din, out.value, margin);
      }
    }
  }
  return rep;
}

inline double reevaluate_dpi_witness(const nlohmann::json& w) {
  if (w.value("kind", "") != "dpi") throw InvalidArgument("witness: expected kind 'dpi'");
  const double alpha = w.at("alpha").get<double>(), z = w.at("z").get<double>();
  const KrausChannel ch = channel_from_json(w.at("channel"));
  const DensityMatrix rho(matrix_from_json(w.at("rho")));
  const DensityMatrix sigma(matrix_from_json(w.at("sigma")));
  return d_alpha_z(apply(ch, rho), apply(ch, sigma), alpha, z).value - d_alpha_z(rho, sigma, alpha, z).value;
}

//=========================================================================
// Monotonicity <-> convexity reduction
//=========================================================================

struct EquivalenceReport {
  ParamPoint point;
  double theta = 0.5;
  double psi_blocks = 0.0;    // Psi of the block states rho, sigma on C^N (x) C^2
  double psi_traced = 0.0;    // Psi after tracing out C^2
  double psi_0 = 0.0;
  double psi_1 = 0.0;
  double dpi_margin = 0.0;        // psi_traced - psi_blocks
  double convexity_margin = 0.0;  // Psi(mixture) - chord
  bool agree = false;
  bool directions_match = false;

  nlohmann::json to_json() const {
    return {{"p", point.p},
            {"q", point.q},
            {"s", point.s},
            {"theta", theta},
            {"psi_blocks", psi_blocks},
            {"psi_traced", psi_traced},
            {"psi_0", psi_0},
            {"psi_1", psi_1},
            {"dpi_margin", dpi_margin},
            {"convexity_margin", convexity_margin},
            {"agree", agree},
            {"directions_match", directions_match}};
  }
};

/// Builds rho = (1-theta) rho0 (x) |0><0| + theta rho1 (x) |1><1| (same for
/// sigma), traces out the flag qubit and compares the resulting DPI margin
/// with the midpoint convexity margin of Psi on the slice s = 1/(p+q).
inline EquivalenceReport monotonicity_equivalence_demo(double p, double q, int dim, double theta, std::uint64_t seed) {
  if (p + q == 0.0) throw InvalidArgument("monotonicity demo: p + q must be nonzero");
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidArgument("monotonicity demo: theta must lie in [0, 1]");
  if (dim < 1) throw InvalidArgument("monotonicity demo: dim must be >= 1");
  EquivalenceReport rep;
  rep.point = {p, q, 1.0 / (p + q)};
  rep.theta = theta;
  CounterRng rng(seed);
  const DensityMatrix rho0 = random_density(dim, dim, rng), rho1 = random_density(dim, dim, rng);
  const DensityMatrix sigma0 = random_density(dim, dim, rng), sigma1 = random_density(dim, dim, rng);
  ComplexMatrix up = ComplexMatrix::Zero(2, 2), down = ComplexMatrix::Zero(2, 2);
  up(0, 0) = 1.0;
  down(1, 1) = 1.0;
  auto blocks = [&](const DensityMatrix& x0, const DensityMatrix& x1) {
    return DensityMatrix(HermitianMatrix::symmetrize((1.0 - theta) * tensor(x0.matrix(), up) +
                                                     theta * tensor(x1.matrix(), down)));
  };
  const DensityMatrix rho = blocks(rho0, rho1), sigma = blocks(sigma0, sigma1);
  const KrausChannel tr2 = partial_trace_channel(dim, 2, 2);
  const ComplexMatrix ident = identity(dim);
  rep.psi_blocks = psi_on_support(rho.hermitian(), sigma.hermitian(), identity(2 * dim), rep.point);
  rep.psi_traced = psi_on_support(apply(tr2, rho).hermitian(), apply(tr2, sigma).hermitian(), ident, rep.point);
  rep.dpi_margin = rep.psi_traced - rep.psi_blocks;

  rep.psi_0 = psi_on_support(rho0.hermitian(), sigma0.hermitian(), ident, rep.point);
  rep.psi_1 = psi_on_support(rho1.hermitian(), sigma1.hermitian(), ident, rep.point);
  const HermitianMatrix rho_mix = HermitianMatrix::symmetrize((1.0 - theta) * rho0.matrix() + theta * rho1.matrix());
  const HermitianMatrix sigma_mix =
      HermitianMatrix::symmetrize((1.0 - theta) * sigma0.matrix() + theta * sigma1.matrix());
  const double psi_mix = psi_on_support(rho_mix, sigma_mix, ident, rep.point);
  rep.convexity_margin = psi_mix - ((1.0 - theta) * rep.psi_0 + theta * rep.psi_1);

  const double scale = std::max({1.0, std::abs(rep.psi_blocks), std::abs(rep.psi_traced)});
  const double tol = 1e-10 * scale;
  rep.agree = std::abs(rep.dpi_margin - rep.convexity_margin) <= tol;
  auto sign = [tol](double x) { return x > tol ? 1 : (x < -tol ? -1 : 0); };
  rep.directions_match = sign(rep.dpi_margin) == sign(rep.convexity_margin);
  return rep;
}

//=========================================================================
// Counterexample search
//=========================================================================

namespace detail {

inline ComplexMatrix diag2(double a, double b) { return diagonal({a, b}); }

inline ComplexMatrix rotated(double d1, double d2, double angle) {
  ComplexMatrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r * diag2(d1, d2) * r.transpose();
}

inline std::vector<double> log_grid() { return {1e-3, 1e-2, 1e-1, 1.0, 10.0}; }
inline std::vector<double> eps_grid() { return {1e-2, 1e-3, 1e-4}; }

/// K_eps = [[1, 0], [1, eps]] plus diagonal variants.
inline std::vector<ComplexMatrix> witness_kernels() {
  std::vector<ComplexMatrix> ks{identity(2)};
  for (double eps : eps_grid()) {
    ComplexMatrix k(2, 2);
    k << 1.0, 0.0, 1.0, eps;
    ks.push_back(k);
    ks.push_back(diag2(1.0, eps));
    ks.push_back(diag2(eps, 1.0));
  }
  return ks;
}

struct WitnessSearch {
  const JointFunctional& f;
  Direction dir;
  ProbeReport rep;

  void consider(const ComplexMatrix& a0, const ComplexMatrix& a1, const ComplexMatrix& b0, const ComplexMatrix& b1,
                const ComplexMatrix& k) {
    const PositiveDefiniteMatrix pa0(HermitianMatrix::symmetrize(a0)), pa1(HermitianMatrix::symmetrize(a1));
    const PositiveDefiniteMatrix pb0(HermitianMatrix::symmetrize(b0)), pb1(HermitianMatrix::symmetrize(b1));
    const MidpointEval e = midpoint_margin(f, dir, 0.5, pa0, pa1, pb0, pb1, k);
    if (!std::isfinite(e.margin)) return;
    ++rep.samples;
    if (e.margin > violation_threshold(e.f0, e.f1)) ++rep.violations;
    if (e.margin > rep.worst_margin) {
      rep.worst_margin = e.margin;
      rep.witness = joint_witness(f, dir, 0.5, pa0, pa1, pb0, pb1, k, e);
    }
  }
};

/// Diagonal pairs on the log grid, and rotated pairs R(t0) D R(t0)^T vs
/// c R(t1) D R(t1)^T with t0, t1 multiples of pi/16 and c on the log grid.
/// The second family exposes the failure of operator convexity of x^p
/// outside [-1, 0] u [1, 2]. With `vary_b` the same pairs are used for B
/// (A fixed), and diagonal pairs for both arguments together.
inline void scan_witness_families(WitnessSearch& search, bool vary_b) {
  const auto grid = log_grid();
  const auto kernels = witness_kernels();
  const ComplexMatrix id = identity(2);
  std::vector<ComplexMatrix> diag_points;
  for (double a : grid)
    for (double b : grid) diag_points.push_back(diag2(a, b));
  for (const auto& k : kernels) {
    for (std::size_t i = 0; i < diag_points.size(); ++i)
      for (std::size_t j = i + 1; j < diag_points.size(); ++j) {
        search.consider(diag_points[i], diag_points[j], id, id, k);
        if (vary_b) {
          search.consider(id, id, diag_points[i], diag_points[j], k);
          search.consider(diag_points[i], diag_points[j], diag_points[j], diag_points[i], k);
          search.consider(diag_points[i], diag_points[j], diag_points[i], diag_points[j], k);
        }
      }
    for (double d1 : grid)
      for (double d2 : grid) {
        if (d1 >= d2) continue;
        for (int i = 0; i < 16; ++i)
          for (int j = i + 1; j < 16; ++j) {
            const ComplexMatrix x0 = rotated(d1, d2, i * std::numbers::pi / 16.0);
            const ComplexMatrix x1 = rotated(d1, d2, j * std::numbers::pi / 16.0);
            for (double c : grid) {
              search.consider(x0, c * x1, id, id, k);
              if (vary_b) search.consider(id, id, x0, c * x1, k);
            }
          }
      }
  }
}

inline ProbeReport certify(WitnessSearch& search) {
  ProbeReport& rep = search.rep;
  if (rep.witness.is_null()) return rep;
  const double recorded = rep.witness.at("margin").get<double>();
  const double again = reevaluate_joint_witness(rep.witness, search.f);
  const double f0 = rep.witness.at("F0").get<double>(), f1 = rep.witness.at("F1").get<double>();
  rep.certified = recorded > 1e-6 && recorded > violation_threshold(f0, f1) &&
                  std::abs(again - recorded) <= 1e-12 * std::max(1.0, std::abs(recorded));
  return rep;
}

}  // namespace detail

/// Grid search for a midpoint violation of the given direction for Upsilon_{p,s}
/// on 2x2 matrices. A report with certified == false means none was found.
inline ProbeReport counterexample_upsilon(double p, double s, Direction dir) {
  if (dir == Direction::Monotone) throw InvalidArgument("counterexample: direction must be convex or concave");
  const JointFunctional f = upsilon_functional(p, s, false);
  detail::WitnessSearch search{f, dir, {}};
  search.rep.functional = f.spec;
  search.rep.direction = dir;
  search.rep.dim = 2;
  detail::scan_witness_families(search, false);
  return detail::certify(search);
}

/// Same search for Psi_{p,q,s}, varying A, B or both.
inline ProbeReport counterexample_psi(const ParamPoint& pt, Direction dir) {
  if (dir == Direction::Monotone) throw InvalidArgument("counterexample: direction must be convex or concave");
  const JointFunctional f = psi_functional(pt, false);
  detail::WitnessSearch search{f, dir, {}};
  search.rep.functional = f.spec;
  search.rep.direction = dir;
  search.rep.dim = 2;
  detail::scan_witness_families(search, true);
  return detail::certify(search);
}

//=========================================================================
// Identity verifiers
//=========================================================================

struct VariationalReport {
  double s = 0.0;
  std::string formula;           // "sup" (s > 1 or s < 0) or "inf" (0 < s < 1)
  double trace_power = 0.0;      // Tr X^s
  double attained = 0.0;         // objective at Y = X^{s-1}
  double attainment_error = 0.0;
  double worst_bound_margin = -std::numeric_limits<double>::infinity();  // > 0 means the bound failed
  long samples = 0;
  long bound_violations = 0;
  bool passed = false;
};

/// Objective of the variational formula for Tr X^s at the point Y.
inline double variational_objective(const PositiveDefiniteMatrix& x, const HermitianMatrix& y, double s) {
  if (s == 0.0 || s == 1.0 || !std::isfinite(s)) throw InvalidArgument("variational: s must differ from 0 and 1");
  const double cross = (x.matrix() * y.matrix()).trace().real();
  const Spectrum ys = eig_hermitian(y);
  if (s > 1.0 || s < 0.0) return s * cross - (s - 1.0) * trace_function(ys, fn::power(s / (s - 1.0)));
  return s * cross + (1.0 - s) * trace_function(ys, fn::power(-s / (1.0 - s)));
}

/// Checks the optimizer Y = X^{s-1} and the bound direction on random Y.
inline VariationalReport verify_variational(const PositiveDefiniteMatrix& x, double s, int n_random, std::uint64_t seed) {
  if (s == 0.0 || s == 1.0 || !std::isfinite(s)) throw InvalidArgument("variational: s must differ from 0 and 1");
  VariationalReport rep;
  rep.s = s;
  const bool sup = s > 1.0 || s < 0.0;
  rep.formula = sup ? "sup" : "inf";
  rep.trace_power = trace_function(x.spectrum(), fn::power(s));
  const double scale = std::max(1.0, std::abs(rep.trace_power));
  rep.attained = variational_objective(x, HermitianMatrix::symmetrize(power(x, s - 1.0)), s);
  rep.attainment_error = std::abs(rep.attained - rep.trace_power);
  const Eigen::Index n = x.dim();
  for (int i = 0; i < n_random; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    HermitianMatrix y = HermitianMatrix::symmetrize(random_positive_definite(n, 0.01, 10.0, rng).matrix());
    if (sup && i % 2 == 1 && n > 1) {
      const double mass = rng.uniform(0.1, 10.0);
      y = HermitianMatrix::symmetrize(mass * random_density(n, n - 1, rng).matrix());
    }
    const double value = variational_objective(x, y, s);
    const double margin = sup ? value - rep.trace_power : rep.trace_power - value;
    ++rep.samples;
    if (margin > 1e-10 * scale) ++rep.bound_violations;
    rep.worst_bound_margin = std::max(rep.worst_bound_margin, margin);
  }
  rep.passed = rep.attainment_error <= 1e-9 * scale && rep.bound_violations == 0;
  return rep;
}

/// Tr XY - Tr (Y^{s/2} X^s Y^{s/2})^{1/s}; nonnegative when the inequality holds.
inline double lieb_thirring_gap(const HermitianMatrix& x, const HermitianMatrix& y, double s) {
  if (!(s > 0.0 && s < 1.0)) throw InvalidArgument("lieb_thirring: s must lie in (0, 1)");
  if (x.dim() != y.dim()) throw InvalidArgument("lieb_thirring: dimension mismatch");
  const ComplexMatrix xs = apply_function(eig_hermitian(x), fn::power(s), SpectralConvention::Support);
  const ComplexMatrix yh = apply_function(eig_hermitian(y), fn::power(s / 2.0), SpectralConvention::Support);
  const HermitianMatrix inner = HermitianMatrix::symmetrize(yh * xs * yh);
  const double lhs = trace_function(eig_hermitian(inner), fn::power(1.0 / s), SpectralConvention::Support);
  return (x.matrix() * y.matrix()).trace().real() - lhs;
}

inline bool verify_lieb_thirring(const HermitianMatrix& x, const HermitianMatrix& y, double s) {
  const double rhs = (x.matrix() * y.matrix()).trace().real();
  return lieb_thirring_gap(x, y, s) >= -1e-10 * std::max(1.0, std::abs(rhs));
}

/// Smallest eigenvalue of (M0 + M1)/2 - M(mid), negated, for M(A, B) = A K B^q K* A.
inline double opconv_margin(const PositiveDefiniteMatrix& a0, const PositiveDefiniteMatrix& a1,
                            const PositiveDefiniteMatrix& b0, const PositiveDefiniteMatrix& b1, const ComplexMatrix& k,
                            double q, double* scale_out = nullptr) {
  auto m = [&](const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b) {
    return ComplexMatrix(a.matrix() * k * power(b, q) * k.adjoint() * a.matrix());
  };
  const ComplexMatrix m0 = m(a0, b0), m1 = m(a1, b1);
  const ComplexMatrix mm = m(detail::mix(a0, a1, 0.5), detail::mix(b0, b1, 0.5));
  const HermitianMatrix diff = HermitianMatrix::symmetrize((m0 + m1) * 0.5 - mm);
  if (scale_out) *scale_out = std::max({1.0, max_abs(m0), max_abs(m1)});
  return -eig_hermitian(diff).min();
}

/// Operator-order midpoint probe of (A, B) -> A K B^q K* A for -1 <= q <= 0.
inline ProbeReport verify_opconv(double q, int dim, long n_samples, std::uint64_t seed) {
  if (!(q >= -1.0 && q <= 0.0)) throw InvalidArgument("opconv: q must lie in [-1, 0]");
  ProbeReport rep;
  rep.functional = {{"name", "opconv"}, {"q", q}};
  rep.direction = Direction::Convex;
  rep.dim = dim;
  rep.seed = seed;
  for (long i = 0; i < n_samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const auto a0 = random_positive_definite(dim, 0.1, 10.0, rng), a1 = random_positive_definite(dim, 0.1, 10.0, rng);
    const auto b0 = random_positive_definite(dim, 0.1, 10.0, rng), b1 = random_positive_definite(dim, 0.1, 10.0, rng);
    const ComplexMatrix k = random_ginibre(dim, dim, rng);
    double scale = 1.0;
    const double margin = opconv_margin(a0, a1, b0, b1, k, q, &scale);
    ++rep.samples;
    if (margin > tolerances().violation_rel * scale) ++rep.violations;
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.witness = {{"kind", "opconv"},
                     {"q", q},
                     {"A0", matrix_to_json(a0.matrix())},
                     {"A1", matrix_to_json(a1.matrix())},
                     {"B0", matrix_to_json(b0.matrix())},
                     {"B1", matrix_to_json(b1.matrix())},
                     {"K", matrix_to_json(k)},
                     {"margin", margin}};
    }
  }
  return rep;
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be >= 1");
  nodes.assign(std::size_t(n), 0.0);
  weights.assign(std::size_t(n), 0.0);
  auto legendre = [n](double x, double& deriv) {
    double p0 = 1.0, p1 = x;
    if (n == 1) {
      deriv = 1.0;
      return x;
    }
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    deriv = n * (x * p1 - p0) / (x * x - 1.0);
    return p1;
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double deriv = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double value = legendre(x, deriv);
      const double dx = value / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(x, deriv);
    nodes[std::size_t(i)] = -x;
    nodes[std::size_t(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    weights[std::size_t(i)] = w;
    weights[std::size_t(n - 1 - i)] = w;
  }
}

/// (sin(pi sigma)/pi) int_0^inf t^{sigma-1} / (1 + t/x) dt by quadrature.
/// t = x u/(1-u) maps to u in (0, 1); the halves u < 1/2 and u > 1/2 use
/// u = w^{1/sigma} and 1-u = w^{1/(1-sigma)}, which absorb the endpoint
/// power laws so the integrand in w is bounded.
inline double integral_representation(double x, double sigma, int n_nodes) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("integral representation: x must be positive");
  if (!(sigma > 0.0 && sigma < 1.0)) throw InvalidArgument("integral representation: sigma must lie in (0, 1)");
  if (n_nodes < 2) throw InvalidArgument("integral representation: need at least 2 nodes");
  std::vector<double> nodes, weights;
  gauss_legendre(n_nodes / 2, nodes, weights);
  auto g = [&](double t) { return std::pow(t, sigma - 1.0) / (1.0 + t / x); };
  double total = 0.0;
  const double w_lo = std::pow(0.5, sigma), w_hi = std::pow(0.5, 1.0 - sigma);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    {
      const double w = 0.5 * w_lo * (nodes[i] + 1.0);
      const double u = std::pow(w, 1.0 / sigma);
      const double du = std::pow(w, 1.0 / sigma - 1.0) / sigma;
      const double t = x * u / (1.0 - u);
      total += 0.5 * w_lo * weights[i] * g(t) * x / ((1.0 - u) * (1.0 - u)) * du;
    }
    {
      const double w = 0.5 * w_hi * (nodes[i] + 1.0);
      const double v = std::pow(w, 1.0 / (1.0 - sigma));
      const double dv = std::pow(w, 1.0 / (1.0 - sigma) - 1.0) / (1.0 - sigma);
      const double t = x * (1.0 - v) / v;
      total += 0.5 * w_hi * weights[i] * g(t) * x / (v * v) * dv;
    }
  }
  return std::sin(std::numbers::pi * sigma) / std::numbers::pi * total;
}

/// |quadrature - x^sigma|.
inline double verify_integral_representation(double x, double sigma, int n_nodes) {
  return std::abs(integral_representation(x, sigma, n_nodes) - std::pow(x, sigma));
}

//=========================================================================
// Sweeps
//=========================================================================

/// Inclusive linear range; steps == 1 gives {start}, steps == 0 nothing.
struct GridAxis {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> values() const {
    if (steps < 0) throw InvalidArgument("grid: steps must be >= 0");
    std::vector<double> v;
    for (int i = 0; i < steps; ++i)
      v.push_back(steps == 1 ? start : start + (stop - start) * double(i) / double(steps - 1));
    return v;
  }
};

/// Either a (p, q, s) box, or an (alpha, z) box mapped onto s = 1/(p+q).
struct SweepGrid {
  bool alpha_z = false;
  GridAxis p, q, s;       // used when !alpha_z
  GridAxis alpha, z;      // used when alpha_z
  std::vector<ParamPoint> points;  // explicit extra points, appended in order

  std::vector<ParamPoint> expand() const {
    std::vector<ParamPoint> out;
    if (alpha_z) {
      for (double a : alpha.values())
        for (double zz : z.values()) out.push_back(ParamPoint::from_alpha_z(a, zz));
    } else {
      for (double pp : p.values())
        for (double qq : q.values())
          for (double ss : s.values()) out.push_back({pp, qq, ss});
    }
    out.insert(out.end(), points.begin(), points.end());
    for (const auto& pt : out)
      if (pt.s == 0.0) throw InvalidArgument("grid: s = 0 is not a valid point");
    return out;
  }
};

struct SweepConfig {
  std::vector<int> dims{2, 3};
  long samples = 200;
  std::uint64_t seed = 0;
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
  bool random_k = true;
  unsigned workers = 1;
};

struct SweepRow {
  std::size_t index = 0;
  ParamPoint point;
  RegionLabel label;
  ProbeReport report;
};

/// A probe violated a Known label.
class ContradictionError : public Error {
 public:
  ContradictionError(const std::string& msg, nlohmann::json witness, std::string path)
      : Error(msg), witness_(std::move(witness)), path_(std::move(path)) {}
  const nlohmann::json& witness() const { return witness_; }
  const std::string& witness_path() const { return path_; }

 private:
  nlohmann::json witness_;
  std::string path_;
};

inline Direction probe_direction(const RegionLabel& label) {
  return label.kind == RegionKind::ConcaveKnown ? Direction::Concave : Direction::Convex;
}

/// Seed of row (point_index, dim_index): derive_path(master, {point, dim}).
inline std::uint64_t sweep_row_seed(std::uint64_t master, std::size_t point_index, std::size_t dim_index) {
  return CounterRng::derive_path(master, {std::uint64_t(point_index), std::uint64_t(dim_index)});
}

/// Classifies and probes each (point, dim). Rows come back in grid order
/// whatever the worker count. The first contradiction in grid order aborts
/// the sweep; its witness is written to witness_dir when that is nonempty.
inline std::vector<SweepRow> sweep(const SweepGrid& grid, const SweepConfig& cfg, const std::string& witness_dir = "") {
  if (cfg.dims.empty()) throw InvalidArgument("sweep: dims must be nonempty");
  for (int d : cfg.dims)
    if (d < 1 || d > 8) throw InvalidArgument("sweep: dims must lie in [1, 8]");
  const auto pts = grid.expand();
  const std::size_t nd = cfg.dims.size();
  std::vector<SweepRow> rows(pts.size() * nd);
  parallel_for(rows.size(), cfg.workers, [&](std::size_t r) {
    const std::size_t i = r / nd, d = r % nd;
    SweepRow& row = rows[r];
    row.index = r;
    row.point = pts[i];
    row.label = classify(pts[i]);
    ProbeConfig pc;
    pc.dim = cfg.dims[d];
    pc.samples = cfg.samples;
    pc.seed = sweep_row_seed(cfg.seed, i, d);
    pc.spectrum_lo = cfg.spectrum_lo;
    pc.spectrum_hi = cfg.spectrum_hi;
    row.report = probe_joint(psi_functional(pts[i], cfg.random_k), probe_direction(row.label), pc);
  });
  for (const auto& row : rows) {
    if (row.label.known() && row.report.violations > 0) {
      std::string path;
      if (!witness_dir.empty()) path = write_content_addressed(witness_dir, "witness", row.report.witness);
      throw ContradictionError("probe contradicts " + std::string(to_string(row.label.kind)) + " at (p,q,s) = (" +
                                   format_double(row.point.p) + ", " + format_double(row.point.q) + ", " +
                                   format_double(row.point.s) + "), dim " + std::to_string(row.report.dim),
                               row.report.witness, path);
    }
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p,q,s,label,citation,dim,samples,worst_margin,violations\n";
  for (const auto& r : rows) {
    out += format_double(r.point.p) + "," + format_double(r.point.q) + "," + format_double(r.point.s) + "," +
           to_string(r.label.kind) + "," + r.label.citation + "," + std::to_string(r.report.dim) + "," +
           std::to_string(r.report.samples) + "," + format_double(r.report.worst_margin) + "," +
           std::to_string(r.report.violations) + "\n";
  }
  return out;
}

/// Ensemble description and per-row seeds, so every CSV row can be rerun alone.
inline nlohmann::json sweep_metadata(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["ensemble"] = {{"A, B", "Haar-rotated, eigenvalues uniform in [lo, hi]"},
                   {"lo", cfg.spectrum_lo},
                   {"hi", cfg.spectrum_hi},
                   {"K", cfg.random_k ? "complex Ginibre" : "identity"},
                   {"theta", 0.5}};
  j["master_seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& r : rows)
    seeds.push_back({{"row", r.index}, {"p", r.point.p}, {"q", r.point.q}, {"s", r.point.s},
                     {"dim", r.report.dim}, {"seed", r.report.seed}});
  j["rows"] = std::move(seeds);
  return j;
}

}  // namespace divlab

#endif  // DIVLAB_CONVEXITY_HPP
