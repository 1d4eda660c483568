#pragma once

// The transverse invariant: the class of z+ in tilde homology. The hat
// invariant vanishes exactly when this one does, so only the tilde class is
// decided.

#include <optional>
#include <utility>

#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/grid.hpp"

namespace gridhfl {

struct ThetaCertificate {
  BraidWord word;
  GridDiagram grid;
  GridState state;  // z+(grid)
  StateId state_id = 0;
  bool is_cycle = false;
  bool vanishes = false;
  SparseVector witness;  // ∂̃ witness = {state_id} when vanishes
  Bigrading gradings;
};

inline ThetaCertificate theta_of_grid(const BraidWord& w, const GridDiagram& g, const ResourceCaps& caps = {}) {
  validate(g);
  check_cap(g.size, caps.boundary_k, "theta");
  ThetaCertificate cert;
  cert.word = w;
  cert.grid = g;
  cert.state = z_plus(g);
  cert.state_id = state_id(cert.state);
  const SparseVector chain{static_cast<std::uint32_t>(cert.state_id)};
  cert.is_cycle = apply_tilde_differential(g, chain).empty();
  if (!cert.is_cycle) throw InvariantViolation("z+ is not a cycle");
  const auto bd = is_boundary(g, chain, caps);
  cert.vanishes = bd.is_boundary;
  cert.witness = bd.witness;
  cert.gradings = gradings(g, cert.state);
  return cert;
}

inline ThetaCertificate theta(const BraidWord& w, const ResourceCaps& caps = {}) {
  return theta_of_grid(w, braid_to_grid(w), caps);
}

/// Re-verifies a certificate with one differential application.
inline bool certificate_checks_out(const ThetaCertificate& c) {
  if (!(c.state == z_plus(c.grid))) return false;
  if (!c.vanishes) return c.witness.empty();
  return apply_tilde_differential(c.grid, c.witness) ==
         SparseVector{static_cast<std::uint32_t>(c.state_id)};
}

struct NegativeStabilizationReport {
  ThetaCertificate original;
  ThetaCertificate stabilized;
  bool holds() const { return stabilized.vanishes; }
};

inline NegativeStabilizationReport check_negative_stabilization(const BraidWord& w, const ResourceCaps& caps = {}) {
  return {theta(w, caps), theta(stabilize(w, -1), caps)};
}

struct PropagationReport {
  ThetaCertificate g;
  ThetaCertificate h;
  ThetaCertificate hg;
  bool hypothesis() const { return !g.vanishes && !h.vanishes; }
  bool holds() const { return !hypothesis() || !hg.vanishes; }
};

/// theta(g) and theta(h) nonzero should force theta(h g) nonzero.
inline PropagationReport check_nonzero_propagation(const BraidWord& g, const BraidWord& h,
                                                   const ResourceCaps& caps = {}) {
  if (g.strands() != h.strands()) throw InputError("braids must have the same strand count");
  return {theta(g, caps), theta(h, caps), theta(h * g, caps)};
}

struct AlexanderReport {
  int self_linking = 0;
  int alexander2 = 0;  // twice the Alexander grading of z+
  bool holds() const { return alexander2 == self_linking + 1; }
};

/// The Alexander grading of z+ against (sl + 1) / 2, for knots.
inline AlexanderReport theta_alexander_consistency(const BraidWord& w, const ResourceCaps& caps = {}) {
  if (component_partition(w).component_count() != 1) throw InputError("closure is not a knot");
  const auto g = braid_to_grid(w);
  check_cap(g.size, caps.boundary_k, "theta gradings");
  const auto gr = gradings(g, z_plus(g));
  return {self_linking(w), gr.alexander2.at(0)};
}

}  // namespace gridhfl
