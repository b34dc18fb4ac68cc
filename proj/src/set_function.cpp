#include "hcc/set_function.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "local_masks.hpp"

namespace hcc {

namespace {

using Value = SetFunction::Value;
using Mask = SetFunction::Mask;

void check_universe(const std::vector<Vertex>& universe) {
  if (static_cast<int>(universe.size()) > kMaxTableUniverse)
    throw std::length_error("universe too large for a subset table");
  if (!std::is_sorted(universe.begin(), universe.end()) ||
      std::adjacent_find(universe.begin(), universe.end()) != universe.end())
    throw std::invalid_argument("universe must be strictly increasing");
}

void check_compatible(const SetFunction& f, const SetFunction& g) {
  if (f.universe() != g.universe()) throw std::invalid_argument("universe mismatch");
  if (f.bound() != g.bound()) throw std::invalid_argument("bound mismatch");
}

SetFunction convolve_naive(const SetFunction& f, const SetFunction& g) {
  SetFunction out(f.universe(), f.bound());
  const Mask full = f.full_mask();
  std::vector<Mask> finite_f, finite_g;
  for (Mask s = 0; s <= full; ++s) {
    if (f.finite(s)) finite_f.push_back(s);
    if (g.finite(s)) finite_g.push_back(s);
  }
  // walk the sparser side, enumerate submasks of its complement on the other
  const bool swap = finite_f.size() > finite_g.size();
  const SetFunction& outer = swap ? g : f;
  const SetFunction& inner = swap ? f : g;
  const auto& outer_list = swap ? finite_g : finite_f;
  const Value bound = f.bound();
  std::vector<Value> best(out.table_size(), out.infinity());
  for (Mask t : outer_list) {
    const Value ft = outer[t];
    const Mask comp = full & ~t;
    for (Mask r = comp;; r = (r - 1) & comp) {
      if (inner.finite(r)) {
        Value v = ft + inner[r];
        if (v <= bound && v < best[t | r]) best[t | r] = v;
      }
      if (r == 0) break;
    }
  }
  for (Mask s = 0; s <= full; ++s) out.set(s, best[s]);
  return out;
}

// Ranked subset convolution with each value v encoded as the monomial x^v.
// Counts never exceed 2^u ≤ 2^26, so uint32 arithmetic (exact mod 2^32)
// recovers which coefficients are nonzero.
SetFunction convolve_fast(const SetFunction& f, const SetFunction& g, Value degree) {
  SetFunction out(f.universe(), f.bound());
  const int u = f.universe_size();
  const std::size_t n = f.table_size();
  const std::size_t p = static_cast<std::size_t>(degree) + 1;

  auto transform = [&](const SetFunction& h) {
    std::vector<std::uint32_t> table((u + 1) * n * p, 0);
    for (Mask s = 0; s < n; ++s)
      if (h.finite(s) && h[s] <= degree)
        table[(std::popcount(s) * n + s) * p + h[s]] = 1;
    for (int r = 0; r <= u; ++r) {
      std::uint32_t* base = table.data() + r * n * p;
      for (int b = 0; b < u; ++b) {
        const Mask bit = Mask{1} << b;
        for (Mask s = 0; s < n; ++s) {
          if (!(s & bit)) continue;
          std::uint32_t* dst = base + s * p;
          const std::uint32_t* src = base + (s ^ bit) * p;
          for (std::size_t d = 0; d < p; ++d) dst[d] += src[d];
        }
      }
    }
    return table;
  };

  const auto fz = transform(f);
  const auto gz = transform(g);
  std::vector<std::uint32_t> acc(n * p);
  for (int r = 0; r <= u; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Mask s = 0; s < n; ++s) {
      const int c = std::popcount(s);
      std::uint32_t* dst = acc.data() + s * p;
      for (int i = std::max(0, r - c); i <= std::min(r, c); ++i) {
        const std::uint32_t* a = fz.data() + (i * n + s) * p;
        const std::uint32_t* b = gz.data() + ((r - i) * n + s) * p;
        for (std::size_t da = 0; da < p; ++da) {
          if (a[da] == 0) continue;
          for (std::size_t db = 0; da + db < p; ++db) dst[da + db] += a[da] * b[db];
        }
      }
    }
    for (int b = 0; b < u; ++b) {
      const Mask bit = Mask{1} << b;
      for (Mask s = 0; s < n; ++s) {
        if (!(s & bit)) continue;
        std::uint32_t* dst = acc.data() + s * p;
        const std::uint32_t* src = acc.data() + (s ^ bit) * p;
        for (std::size_t d = 0; d < p; ++d) dst[d] -= src[d];
      }
    }
    for (Mask s = 0; s < n; ++s) {
      if (std::popcount(s) != r) continue;
      const std::uint32_t* poly = acc.data() + s * p;
      for (std::size_t d = 0; d < p; ++d)
        if (poly[d] != 0) {
          out.set(s, static_cast<Value>(d));
          break;
        }
    }
  }
  return out;
}

}  // namespace

SetFunction::SetFunction(std::vector<Vertex> universe, Value bound) : universe_(std::move(universe)), bound_(bound) {
  check_universe(universe_);
  if (bound < 0) throw std::invalid_argument("negative bound");
  values_.assign(std::size_t{1} << universe_.size(), infinity());
}

SetFunction SetFunction::identity(std::vector<Vertex> universe, Value bound) {
  SetFunction e(std::move(universe), bound);
  e.set(0, 0);
  return e;
}

SetFunction SetFunction::tabulate(std::vector<Vertex> universe, Value bound,
                                  const std::function<std::optional<Value>(Mask)>& fn) {
  SetFunction f(std::move(universe), bound);
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    auto v = fn(s);
    if (v) f.set(s, *v);
  }
  return f;
}

void SetFunction::set(Mask mask, Value v) {
  if (mask >= values_.size()) throw std::out_of_range("mask outside table");
  if (v != infinity() && (v < 0 || v > bound_)) throw std::out_of_range("value outside 0..bound");
  values_[mask] = v;
}

SetFunction::Mask SetFunction::mask_of(const VertexSet& s) const {
  Mask mask = 0;
  int matched = 0;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (s.contains(universe_[i])) {
      mask |= Mask{1} << i;
      ++matched;
    }
  if (matched != s.size()) throw std::invalid_argument("set not inside the universe");
  return mask;
}

VertexSet SetFunction::set_of(Mask mask) const {
  VertexSet s;
  for (Mask rest = mask; rest; rest &= rest - 1) s.insert(universe_[std::countr_zero(rest)]);
  return s;
}

SetFunction::Value SetFunction::max_finite() const {
  Value best = -1;
  for (Value v : values_)
    if (v <= bound_) best = std::max(best, v);
  return best;
}

std::size_t fast_backend_bytes(int universe_size, SetFunction::Value degree) {
  const std::size_t n = std::size_t{1} << universe_size;
  const std::size_t p = static_cast<std::size_t>(degree) + 1;
  return (2 * (universe_size + 1) + 1) * n * p * sizeof(std::uint32_t);
}

SetFunction min_plus_convolve(const SetFunction& f, const SetFunction& g, ConvolutionBackend backend,
                              SolverStats* stats) {
  check_compatible(f, g);
  if (stats) ++stats->convolutions;
  const Value mf = f.max_finite();
  const Value mg = g.max_finite();
  if (mf < 0 || mg < 0) return SetFunction(f.universe(), f.bound());
  const Value degree = std::min(f.bound(), mf + mg);
  const bool fits = fast_backend_bytes(f.universe_size(), degree) <= kFastBackendBudgetBytes;

  switch (backend) {
    case ConvolutionBackend::naive:
      return convolve_naive(f, g);
    case ConvolutionBackend::fast:
      if (!fits) throw std::length_error("fast convolution exceeds memory budget");
      return convolve_fast(f, g, degree);
    case ConvolutionBackend::automatic:
      break;
  }
  if (f.universe_size() > 16 && fits) return convolve_fast(f, g, degree);
  return convolve_naive(f, g);
}

SetFunction build_cluster_function(const Graph& g, const VertexSet& universe, HcConvention conv) {
  std::vector<Vertex> members = universe.to_vector();
  const Value bound = 2 * g.edge_count() + 1;
  SetFunction f(members, bound);
  detail::LocalMasks local(g, members);
  f.set(0, 0);
  for (Mask s = 1; s <= f.full_mask(); ++s) {
    if (!local.highly_connected(s, conv)) continue;
    int cut = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      cut += std::popcount(local.adjacency[i] & ~s);
    }
    f.set(s, cut);
  }
  return f;
}

SetFunction min_plus_closure(const SetFunction& f, ConvolutionBackend backend, SolverStats* stats) {
  if (f[0] != 0) throw std::invalid_argument("closure requires f(empty) = 0");
  SetFunction h = f;
  for (int round = 0; round < std::max(1, f.universe_size()); ++round) {
    SetFunction next = min_plus_convolve(h, f, backend, stats);
    // f(∅) = 0 makes h ∗ f ≤ h pointwise
    if (next == h) break;
    h = std::move(next);
  }
  return h;
}

std::vector<SetFunction> convolution_powers(const SetFunction& f, ConvolutionBackend backend, SolverStats* stats) {
  std::vector<SetFunction> powers{f};
  for (int i = 2; i <= f.universe_size(); ++i) {
    SetFunction next = min_plus_convolve(powers.back(), f, backend, stats);
    if (next == powers.back()) break;
    powers.push_back(std::move(next));
  }
  return powers;
}

Partition recover_partition(std::span<const SetFunction> powers) {
  if (powers.empty()) throw std::invalid_argument("no powers given");
  const SetFunction& f = powers.front();
  const Mask full = f.full_mask();
  Partition blocks;
  if (full == 0) return blocks;

  Value target = f.infinity();
  int k = 0;
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i][full] < target) {
      target = powers[i][full];
      k = static_cast<int>(i) + 1;
    }
  if (target == f.infinity()) throw std::runtime_error("no partition exists");

  Mask rest = full;
  while (rest) {
    const Mask low = rest & (~rest + 1);
    if (k == 1) {
      if (f[rest] != powers[0][rest] || !f.finite(rest)) throw std::logic_error("inconsistent power table");
      blocks.push_back(f.set_of(rest));
      break;
    }
    const SetFunction& prev = powers[k - 2];
    const Value want = powers[k - 1][rest];
    bool found = false;
    const Mask others = rest & ~low;
    for (Mask extra = others;; extra = (extra - 1) & others) {
      const Mask block = extra | low;
      const Mask remain = rest & ~block;
      if (f.finite(block) && prev.finite(remain) && f[block] + prev[remain] == want) {
        blocks.push_back(f.set_of(block));
        rest = remain;
        found = true;
        break;
      }
      if (extra == 0) break;
    }
    // powers are monotone (f(∅) = 0), so a value reached by k blocks may
    // already be reached by fewer
    if (!found && powers[k - 2][rest] == want) found = true;
    if (!found) throw std::logic_error("inconsistent power table");
    --k;
  }
  return canonical_partition(std::move(blocks));
}

}  // namespace hcc
