#pragma once

// The acceptance checks, shared by the acceptance test binary and the CLI
// `report` command. Each criterion produces one result line.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/gf2.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/pentagon.hpp"
#include "gridhfl/registry.hpp"
#include "gridhfl/transverse.hpp"

namespace gridhfl {

enum class CriterionStatus { pass, fail, skipped_cap };

struct CriterionResult {
  int id = 0;
  std::string title;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  ResourceCaps caps;
  bool tamper_differential = false;  // flips one ∂̃ entry in criterion 1
};

inline std::string status_label(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass:
      return "pass";
    case CriterionStatus::fail:
      return "FAIL";
    case CriterionStatus::skipped_cap:
      return "skipped (cap)";
  }
  return "?";
}

inline std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "[" << status_label(r.status) << "] " << r.id << ". " << r.title << " (" << r.seconds << " s)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

/// Every word on n strands (1 <= n <= max_n) of length at most max_len.
inline std::vector<BraidWord> all_words(int max_n, int max_len) {
  std::vector<BraidWord> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<int>> layer{{}};
    out.emplace_back(n);
    for (int len = 1; len <= max_len && n > 1; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : layer) {
        for (int i = 1; i < n; ++i) {
          for (int s : {1, -1}) {
            auto v = w;
            v.push_back(s * i);
            out.emplace_back(n, v);
            next.push_back(std::move(v));
          }
        }
      }
      layer = std::move(next);
    }
  }
  return out;
}

namespace detail {

struct CheckFailure {
  std::string message;
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

/// Words with n <= 3 and length <= 4 together with their grids.
inline const std::vector<std::pair<BraidWord, GridDiagram>>& small_corpus() {
  static const auto corpus = [] {
    std::vector<std::pair<BraidWord, GridDiagram>> out;
    for (const auto& w : all_words(3, 4)) out.emplace_back(w, braid_to_grid(w));
    return out;
  }();
  return corpus;
}

inline std::map<std::pair<int, int>, std::uint64_t> collapse(const std::vector<BucketRank>& buckets) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& b : buckets) out[{b.grading.maslov, b.grading.alexander2_total()}] += b.rank;
  return out;
}

inline std::string w_str(const BraidWord& w) { return "\"" + format_braid(w) + "\""; }

}  // namespace detail

inline std::string criterion_1(const AcceptanceOptions& opt) {
  const GridDiagram unknot = find_example("unknot2").diagram();
  std::vector<GridDiagram> grids{unknot};
  for (const auto& [w, g] : detail::small_corpus()) grids.push_back(g);
  bool tampered = false;
  for (const auto& g : grids) {
    auto d = tilde_differential(g, opt.caps);
    if (opt.tamper_differential && !tampered) {
      for (std::uint64_t t = 0; t < d.cols(); ++t) {
        if (d.column(t).empty()) continue;
        auto col = d.column(0);
        col.push_back(static_cast<std::uint32_t>(t));
        d.set_column(0, std::move(col));
        tampered = true;
        break;
      }
    }
    detail::require((d * d).is_zero(), "d^2 != 0 on grid\n" + format_grid(g));
  }
  return std::to_string(grids.size()) + " grids";
}

inline std::string criterion_2(const AcceptanceOptions& opt) {
  std::vector<GridDiagram> grids{find_example("unknot2").diagram()};
  for (const auto& [w, g] : detail::small_corpus()) {
    if (g.size <= 4) grids.push_back(g);
  }
  grids.push_back(find_example("trefoil_b3").diagram());
  detail::require(grids.back().size == 5, "trefoil grid is not k=5");
  for (const auto& g : grids) {
    const auto d = minus_differential(g, opt.caps);
    detail::require(minus_square(d).empty(), "(d^-)^2 != 0 on grid\n" + format_grid(g));
  }
  return std::to_string(grids.size()) + " grids";
}

inline std::string criterion_3(const AcceptanceOptions& opt) {
  std::vector<GridDiagram> grids{find_example("unknot2").diagram()};
  for (const auto& [w, g] : detail::small_corpus()) {
    if (g.size <= 6) grids.push_back(g);
  }
  std::uint64_t entries = 0;
  for (const auto& g : grids) {
    const auto d = tilde_differential(g, opt.caps);
    const GradingTable grade(g);
    std::vector<Bigrading> gr(d.cols());
    enumerate_states(g.size, [&](StateId id, const GridState& x) { gr[id] = grade(x); });
    for (std::uint64_t x = 0; x < d.cols(); ++x) {
      for (auto y : d.column(x)) {
        ++entries;
        detail::require(gr[y].maslov == gr[x].maslov - 1, "Maslov does not drop by 1");
        detail::require(gr[y].alexander2 == gr[x].alexander2, "Alexander grading changes");
      }
    }
  }
  return std::to_string(grids.size()) + " grids, " + std::to_string(entries) + " entries";
}

inline std::string criterion_4(const AcceptanceOptions& opt) {
  std::vector<GridDiagram> grids{find_example("unknot2").diagram()};
  for (const auto& [w, g] : detail::small_corpus()) {
    if (g.size <= 6) grids.push_back(g);
  }
  for (const auto& g : grids) {
    const auto d = tilde_differential(g, opt.caps);
    const auto sparse = sparse_rank(d);
    const auto dense = DenseBitMatrix(d).rank();
    detail::require(sparse == dense, "sparse rank " + std::to_string(sparse) + " != dense " + std::to_string(dense));
    const auto h = homology_ranks(g, opt.caps);
    detail::require(h.total == d.cols() - 2 * dense, "bucketed total disagrees with the dense oracle");
  }
  const auto trefoil = homology_ranks(find_example("trefoil_b3").diagram(), opt.caps);
  detail::require(trefoil.hat_total == 3, "trefoil hat total " + std::to_string(trefoil.hat_total));
  const auto unknot = homology_ranks(find_example("unknot2").diagram(), opt.caps);
  detail::require(unknot.hat_total == 1, "unknot hat total " + std::to_string(unknot.hat_total));
  return std::to_string(grids.size()) + " grids; trefoil 3, unknot 1";
}

/// Quasipositive words whose grids have k <= 9.
inline std::vector<BraidWord> quasipositive_samples() {
  auto b = [](int n, std::vector<int> l) { return BraidWord(n, std::move(l)); };
  using F = QuasipositiveFactor;
  return {
      quasipositive_witness(2, {F{b(2, {}), 1}}),
      quasipositive_witness(2, {F{b(2, {}), 1}, F{b(2, {}), 1}, F{b(2, {}), 1}}),
      quasipositive_witness(2, {F{b(2, {-1}), 1}, F{b(2, {1}), 1}}),
      quasipositive_witness(3, {F{b(3, {}), 1}, F{b(3, {}), 2}}),
      quasipositive_witness(3, {F{b(3, {2}), 1}}),
      quasipositive_witness(3, {F{b(3, {-1}), 2}, F{b(3, {}), 1}}),
      quasipositive_witness(3, {F{b(3, {1}), 2}, F{b(3, {}), 2}}),
      quasipositive_witness(3, {F{b(3, {2}), 1}, F{b(3, {}), 1}}),
      quasipositive_witness(4, {F{b(4, {}), 1}, F{b(4, {}), 3}}),
      quasipositive_witness(4, {F{b(4, {2}), 1}, F{b(4, {}), 3}}),
  };
}

inline std::string criterion_5(const AcceptanceOptions& opt) {
  std::vector<BraidWord> knots_seen;
  for (int n = 1; n <= 3; ++n) {
    const auto c = theta(BraidWord(n), opt.caps);
    detail::require(!c.vanishes, "theta(I_" + std::to_string(n) + ") vanishes");
  }
  knots_seen.emplace_back(1);
  // 20 words: all of n = 2 up to length 3, and n = 3 up to length 1
  std::vector<BraidWord> words;
  for (const auto& w : all_words(2, 3)) {
    if (w.strands() == 2) words.push_back(w);
  }
  for (const auto& w : all_words(3, 1)) {
    if (w.strands() == 3) words.push_back(w);
  }
  detail::require(words.size() == 20, "negative stabilization corpus has " + std::to_string(words.size()) + " words");
  for (const auto& w : words) {
    const auto rep = check_negative_stabilization(w, opt.caps);
    detail::require(rep.holds(), "theta survives negative stabilization of " + detail::w_str(w));
    knots_seen.push_back(w);
    knots_seen.push_back(stabilize(w, -1));
  }
  const auto qp = quasipositive_samples();
  for (const auto& w : qp) {
    const auto g = braid_to_grid(w);
    detail::require(g.size <= 9, "quasipositive sample grid too large for " + detail::w_str(w));
    detail::require(!theta_of_grid(w, g, opt.caps).vanishes, "theta vanishes on quasipositive " + detail::w_str(w));
    knots_seen.push_back(w);
  }
  int knots = 0;
  for (const auto& w : knots_seen) {
    if (component_partition(w).component_count() != 1) continue;
    const auto rep = theta_alexander_consistency(w, opt.caps);
    detail::require(rep.holds(), "A(theta) != (sl+1)/2 for " + detail::w_str(w));
    ++knots;
  }
  return "20 stabilizations, " + std::to_string(qp.size()) + " quasipositive, " + std::to_string(knots) +
         " knots graded";
}

inline std::string criterion_6(const AcceptanceOptions& opt) {
  int pairs = 0;
  for (const auto& w : all_words(3, 3)) {
    for (std::size_t t = 0; t < w.length(); ++t) {
      if (w.letters()[t] < 0) continue;
      const auto pair = build_resolution(w, t);
      const auto rep = verify_theta_pentagon(pair, opt.caps);
      const std::string where = detail::w_str(w) + " letter " + std::to_string(t);
      detail::require(rep.pentagons_to_z_plus == 1, "z+ -> z+ pentagon count != 1 at " + where);
      detail::require(rep.other_targets == 0, "pentagon from z+ to another state at " + where);
      detail::require(rep.chain_map, "phi is not a chain map at " + where);
      detail::require(rep.theta_maps_to_theta, "phi(z+) != z+ at " + where);
      ++pairs;
    }
  }
  return std::to_string(pairs) + " resolution pairs";
}

inline std::vector<std::pair<BraidWord, BraidWord>> propagation_samples() {
  auto b = [](int n, std::vector<int> l) { return BraidWord(n, std::move(l)); };
  return {
      {b(2, {1}), b(2, {1})},          {b(2, {1}), b(2, {})},          {b(2, {1, 1}), b(2, {1})},
      {b(3, {1, 2}), b(3, {2, 1})},    {b(3, {1}), b(3, {2})},         {b(3, {2}), b(3, {1})},
      {b(3, {-1, 2, 1}), b(3, {1})},   {b(3, {1, 2}), b(3, {1})},      {b(3, {2, 1, -2}), b(3, {2})},
      {b(4, {1, 3}), b(4, {2})},
  };
}

inline std::string criterion_7(const AcceptanceOptions& opt) {
  const auto samples = propagation_samples();
  for (const auto& [g, h] : samples) {
    const auto rep = check_nonzero_propagation(g, h, opt.caps);
    const std::string where = "g=" + detail::w_str(g) + " h=" + detail::w_str(h);
    detail::require(rep.hypothesis(), "theta vanishes on a factor: " + where);
    detail::require(rep.holds(), "theta(hg) vanishes: " + where);
  }
  return std::to_string(samples.size()) + " pairs";
}

inline std::string criterion_8(const AcceptanceOptions& opt) {
  auto b = [](int n, std::vector<int> l) { return BraidWord(n, std::move(l)); };
  const std::vector<std::pair<BraidWord, BraidWord>> samples{
      {b(2, {1}), b(2, {1})},           // unknot # unknot
      {b(2, {1, 1, 1}), b(2, {1})},     // trefoil # unknot
      {b(2, {-1}), b(2, {1, 1, 1})},    // unknot # trefoil
      {b(2, {1, 1}), b(2, {1})},        // Hopf # unknot
      {b(2, {1, 1, 1}), b(2, {1, 1, 1})},  // trefoil # trefoil
  };
  std::ostringstream os;
  for (const auto& [g, h] : samples) {
    const auto rg = homology_ranks(braid_to_grid(g), opt.caps).hat_total;
    const auto rh = homology_ranks(braid_to_grid(h), opt.caps).hat_total;
    const auto rs = homology_ranks(braid_to_grid(connected_sum_word(g, h)), opt.caps).hat_total;
    detail::require(rs == rg * rh, "hat rank " + std::to_string(rs) + " != " + std::to_string(rg) + " * " +
                                       std::to_string(rh) + " for " + detail::w_str(g) + " # " + detail::w_str(h));
    os << rg << "*" << rh << "=" << rs << " ";
  }
  auto s = os.str();
  s.pop_back();
  return s;
}

inline std::string criterion_9(const AcceptanceOptions&) {
  const auto w1 = examples::mm_w1();
  const auto w2 = examples::mm_w2();
  detail::require(self_linking(w1) == 3 && self_linking(w2) == 3, "sl(w1), sl(w2) != 3");
  detail::require(algebraic_length(w1) == 11, "a(w1) != 11");
  const auto h = examples::mm_h();
  BraidWord hn(8);
  for (int n = 0; n <= 6; ++n) {
    const int comps = component_partition(hn * w1).component_count();
    detail::require(comps == (n % 2 == 0 ? 1 : 3), "h^" + std::to_string(n) + " w1 has " + std::to_string(comps) +
                                                      " components");
    hn = hn * h;
  }
  // exchange moves in B_3: fragments over sigma_2 with total length <= 4
  std::vector<BraidWord> frags;
  for (const auto& w : all_words(3, 4)) {
    if (w.strands() != 3) continue;
    bool ok = true;
    for (int e : w.letters()) ok = ok && std::abs(e) == 2;
    if (ok) frags.push_back(w);
  }
  int exchanges = 0;
  for (const auto& a : frags) {
    for (const auto& bb : frags) {
      for (const auto& c : frags) {
        if (a.length() + bb.length() + c.length() > 4) continue;
        const auto [x, y] = exchange_move(a, bb, c);
        detail::require(self_linking_data(x) == self_linking_data(y), "exchange move changes SL data");
        ++exchanges;
      }
    }
  }
  // flypes with m odd in B_4: fragments over sigma_2, sigma_3 of length <= 1
  std::vector<BraidWord> f4;
  for (const auto& w : all_words(4, 1)) {
    if (w.strands() == 4 && (w.empty() || std::abs(w.letters()[0]) != 1)) f4.push_back(w);
  }
  int flypes = 0;
  for (int m : {1, 3}) {
    for (const auto& a : f4) {
      for (const auto& bb : f4) {
        for (const auto& c : f4) {
          const auto p = negative_flype_pair(a, bb, c, m);
          detail::require(p.sl_data_guaranteed, "odd flype not flagged");
          detail::require(self_linking_data(p.w1) == self_linking_data(p.w2), "odd flype changes SL data");
          ++flypes;
        }
      }
    }
  }
  return "sl 3/3, a(w1) 11, components ok, " + std::to_string(exchanges) + " exchanges, " + std::to_string(flypes) +
         " flypes";
}

/// Conjugate or positively stabilized pairs of words.
inline std::vector<std::pair<BraidWord, BraidWord>> invariance_samples() {
  auto b = [](int n, std::vector<int> l) { return BraidWord(n, std::move(l)); };
  return {
      {b(2, {1, 1, 1}), stabilize(b(2, {1, 1, 1}), 1)},
      {b(3, {1, 2, 1, 2}), conjugate(b(3, {1, 2, 1, 2}), b(3, {1}))},
      {b(2, {-1}), stabilize(b(2, {-1}), 1)},
      {b(2, {1, 1}), stabilize(b(2, {1, 1}), 1)},
      {b(3, {1, -2}), rotate_letters(b(3, {1, -2}), 1)},
      {b(2, {1}), stabilize(b(2, {1}), 1)},
      {b(3, {1, 2, 1, 2}), rotate_letters(b(3, {1, 2, 1, 2}), 1)},
      {b(1, {}), stabilize(b(1, {}), 1)},
      {b(3, {1, 1, 1, 2}), conjugate(b(3, {1, 1, 1, 2}), b(3, {2}))},
      {b(3, {-1, 2, -1, 2}), rotate_letters(b(3, {-1, 2, -1, 2}), 1)},
  };
}

inline std::string criterion_10(const AcceptanceOptions& opt) {
  const auto samples = invariance_samples();
  int same_k = 0;
  for (const auto& [u, v] : samples) {
    const auto gu = braid_to_grid(u);
    const auto gv = braid_to_grid(v);
    const auto hu = homology_ranks(gu, opt.caps);
    const auto hv = homology_ranks(gv, opt.caps);
    const std::string where = detail::w_str(u) + " vs " + detail::w_str(v);
    detail::require(detail::collapse(hu.hat_buckets) == detail::collapse(hv.hat_buckets),
                    "hat ranks differ: " + where);
    if (gu.size == gv.size && hu.components == hv.components) {
      detail::require(detail::collapse(hu.buckets) == detail::collapse(hv.buckets), "tilde ranks differ: " + where);
      ++same_k;
    }
    detail::require(theta_of_grid(u, gu, opt.caps).vanishes == theta_of_grid(v, gv, opt.caps).vanishes,
                    "theta vanishing differs: " + where);
  }
  return std::to_string(samples.size()) + " pairs (" + std::to_string(same_k) + " with equal k)";
}

struct CriterionSpec {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::string(const AcceptanceOptions&)> run;
};

inline std::vector<CriterionSpec> acceptance_criteria() {
  return {
      {1, "tilde d^2 = 0 on all words n<=3, len<=4 and the k=2 unknot", 60, criterion_1},
      {2, "minus d^2 = 0 with U-monomials for k<=4 and the k=5 trefoil", 60, criterion_2},
      {3, "gradings: d drops Maslov by 1, keeps Alexander (k<=6)", 600, criterion_3},
      {4, "sparse rank = dense oracle; trefoil hat 3; unknot hat 1", 600, criterion_4},
      {5, "theta: I_n nonzero, negative stabilization kills, quasipositive nonzero, A = (sl+1)/2", 600,
       criterion_5},
      {6, "pentagons: unique z+ pentagon, chain map, phi(z+) = z+", 600, criterion_6},
      {7, "nonzero theta propagates to products (10 pairs)", 600, criterion_7},
      {8, "hat rank multiplicative under connected sum (5 pairs)", 600, criterion_8},
      {9, "word-level facts for the 8-strand flype pair", 5, criterion_9},
      {10, "conjugation and positive stabilization preserve ranks and theta (10 pairs)", 600, criterion_10},
  };
}

inline CriterionResult run_criterion(const CriterionSpec& spec, const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = spec.id;
  r.title = spec.title;
  r.budget_seconds = spec.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = spec.run(opt);
    r.status = CriterionStatus::pass;
  } catch (const detail::CheckFailure& f) {
    r.status = CriterionStatus::fail;
    r.detail = f.message;
  } catch (const ResourceCapError& e) {
    r.status = CriterionStatus::skipped_cap;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = CriterionStatus::fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.status == CriterionStatus::pass && r.seconds > r.budget_seconds) {
    r.status = CriterionStatus::fail;
    r.detail += "; over the " + std::to_string(static_cast<int>(r.budget_seconds)) + " s budget";
  }
  return r;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  for (const auto& spec : acceptance_criteria()) {
    out.push_back(run_criterion(spec, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace gridhfl
