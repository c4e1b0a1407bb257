#include "schaefer/gadget.hpp"

#include <algorithm>
#include <string>

#include "schaefer/errors.hpp"

namespace schaefer {

namespace {

void check_gadget_shape(const Gadget& g, const ConstraintSet& s, int n_max) {
  if (g.aux_count < 0) throw UsageError("auxiliary variable count must be non-negative");
  const int total = g.target.arity + g.aux_count;
  if (total > std::min(n_max, kEnumerationCeiling)) {
    throw CapacityError("gadget needs " + std::to_string(total) +
                        " variables, enumeration limit is " +
                        std::to_string(std::min(n_max, kEnumerationCeiling)));
  }
  for (const ConstraintApplication& app : g.applications) {
    const Constraint& c = s.at(app.constraint);
    if (static_cast<int>(app.indices.size()) != c.arity) {
      throw UsageError("gadget application of " + c.name + " has wrong tuple length");
    }
    for (int i : app.indices) {
      if (i < 1 || i > total) throw UsageError("gadget application index out of range");
    }
  }
}

// Bitmask over the 2^total codes (target variables in the low bits)
// selecting the codes that satisfy one application.
std::vector<std::uint64_t> application_mask(const Constraint& c,
                                            const std::vector<int>& indices, int total) {
  const std::uint64_t codes = std::uint64_t{1} << total;
  std::vector<std::uint64_t> mask((codes + 63) / 64, 0);
  for (std::uint64_t code = 0; code < codes; ++code) {
    std::uint32_t p = 0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
      p |= static_cast<std::uint32_t>((code >> (indices[j] - 1)) & 1u) << j;
    }
    if (c.table[p]) mask[code >> 6] |= std::uint64_t{1} << (code & 63);
  }
  return mask;
}

struct SurvivorSet {
  std::vector<std::uint64_t> words;

  void intersect(const std::vector<std::uint64_t>& mask) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] &= mask[w];
  }
  bool contains(const std::vector<std::uint64_t>& mask) const {
    // True when every set bit survives mask (words subset of mask).
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & ~mask[w]) return false;
    }
    return true;
  }
  bool intersects(const std::vector<std::uint64_t>& mask) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & mask[w]) return true;
    }
    return false;
  }
};

}  // namespace

bool verify_perfect(const Gadget& g, const ConstraintSet& s, int n_max) {
  check_gadget_shape(g, s, n_max);
  const int r = g.target.arity;
  const std::uint64_t ext_count = std::uint64_t{1} << g.aux_count;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) {
    bool extendable = false;
    for (std::uint64_t e = 0; e < ext_count && !extendable; ++e) {
      const std::uint64_t code = x | (e << r);
      bool all = true;
      for (const ConstraintApplication& app : g.applications) {
        const Constraint& c = s.at(app.constraint);
        std::uint32_t p = 0;
        for (std::size_t j = 0; j < app.indices.size(); ++j) {
          p |= static_cast<std::uint32_t>((code >> (app.indices[j] - 1)) & 1u) << j;
        }
        if (!c.table[p]) {
          all = false;
          break;
        }
      }
      extendable = all;
    }
    if (extendable != g.target.table[x]) return false;
  }
  return true;
}

namespace {

struct Candidate {
  std::size_t constraint_index;
  std::vector<int> indices;
  std::vector<std::uint64_t> mask;
  int max_var;  // largest variable mentioned
};

// All applications over `total` variables in canonical order: constraints in
// set order (names are unique), index tuples lexicographic.
std::vector<Candidate> enumerate_candidates(const ConstraintSet& s, int total) {
  std::vector<Candidate> out;
  for (std::size_t ci = 0; ci < s.constraints.size(); ++ci) {
    const Constraint& c = s.constraints[ci];
    std::vector<int> tuple(static_cast<std::size_t>(c.arity), 1);
    while (true) {
      Candidate cand;
      cand.constraint_index = ci;
      cand.indices = tuple;
      cand.mask = application_mask(c, tuple, total);
      cand.max_var = *std::max_element(tuple.begin(), tuple.end());
      out.push_back(std::move(cand));
      int pos = c.arity - 1;
      while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == total) {
        tuple[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++tuple[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

// Auxiliary variables must be introduced in increasing order: scanning the
// chosen applications and each tuple left to right, a new variable above the
// base block must be exactly one past the highest seen so far. Returns the
// new high-water mark, or -1 when the order is violated.
int first_use_advance(const std::vector<int>& indices, int base_arity, int seen_max) {
  int running = seen_max;
  for (int idx : indices) {
    if (idx <= base_arity || idx <= running) continue;
    if (idx == running + 1) {
      running = idx;
    } else {
      return -1;
    }
  }
  return running;
}

struct SearchContext {
  const ConstraintSet* set;
  const Constraint* target;
  std::vector<Candidate> candidates;
  std::vector<std::uint64_t> row_mask;  // per target code: its extension codes
  int total = 0;
  int base_arity = 0;
  int max_app_arity = 0;
  int want_apps = 0;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t>* result = nullptr;

  bool rows_feasible(const SurvivorSet& surv) const {
    // Every satisfying target row must keep at least one extension.
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << base_arity); ++x) {
      if (!target->table[x]) continue;
      bool alive = false;
      const std::uint64_t stride = std::uint64_t{1} << base_arity;
      for (std::uint64_t code = x; code < (std::uint64_t{1} << total); code += stride) {
        if (surv.words[code >> 6] & (std::uint64_t{1} << (code & 63))) {
          alive = true;
          break;
        }
      }
      if (!alive) return false;
    }
    return true;
  }

  bool projection_exact(const SurvivorSet& surv) const {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << base_arity); ++x) {
      bool alive = false;
      const std::uint64_t stride = std::uint64_t{1} << base_arity;
      for (std::uint64_t code = x; code < (std::uint64_t{1} << total); code += stride) {
        if (surv.words[code >> 6] & (std::uint64_t{1} << (code & 63))) {
          alive = true;
          break;
        }
      }
      if (alive != target->table[x]) return false;
    }
    return true;
  }

  bool dfs(std::size_t next, int depth, int seen_max, const SurvivorSet& surv) {
    if (depth == want_apps) {
      if (seen_max != total) return false;  // unused auxiliaries: lower level
      if (!projection_exact(surv)) return false;
      *result = chosen;
      return true;
    }
    const int remaining = want_apps - depth;
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const Candidate& cand = candidates[i];
      const int advanced = first_use_advance(cand.indices, base_arity, seen_max);
      if (advanced < 0) continue;
      // Remaining slots must be able to introduce the rest of the auxiliaries.
      if (total - advanced > (remaining - 1) * max_app_arity) continue;
      // An application implied by the survivors changes nothing; any gadget
      // containing it reduces to one found at an earlier level.
      if (surv.contains(cand.mask)) continue;
      SurvivorSet narrowed = surv;
      narrowed.intersect(cand.mask);
      if (!rows_feasible(narrowed)) continue;
      chosen.push_back(i);
      if (dfs(i + 1, depth + 1, advanced, narrowed)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Gadget> search_gadget(const Constraint& target, const ConstraintSet& s,
                                    int max_aux, int max_apps, int n_max) {
  if (max_aux < 0 || max_apps < 1) {
    throw UsageError("gadget search needs max_aux >= 0 and max_apps >= 1");
  }
  // A target accepting everything is implemented by the empty gadget.
  if (std::all_of(target.table.begin(), target.table.end(), [](bool b) { return b; })) {
    return Gadget{target, 0, {}};
  }

  for (int aux = 0; aux <= max_aux; ++aux) {
    const int total = target.arity + aux;
    if (total > std::min(n_max, kEnumerationCeiling)) {
      throw CapacityError("gadget search space exceeds the enumeration limit");
    }
    SearchContext ctx;
    ctx.set = &s;
    ctx.target = &target;
    ctx.total = total;
    ctx.base_arity = target.arity;
    ctx.candidates = enumerate_candidates(s, total);
    ctx.max_app_arity = 0;
    for (const Constraint& c : s.constraints) ctx.max_app_arity = std::max(ctx.max_app_arity, c.arity);

    const std::uint64_t codes = std::uint64_t{1} << total;
    SurvivorSet all;
    all.words.assign((codes + 63) / 64, ~std::uint64_t{0});
    if (codes < 64) all.words[0] = (std::uint64_t{1} << codes) - 1;

    for (int apps = 1; apps <= max_apps; ++apps) {
      std::vector<std::size_t> picked;
      ctx.want_apps = apps;
      ctx.result = &picked;
      ctx.chosen.clear();
      if (ctx.dfs(0, 0, target.arity, all)) {
        Gadget g;
        g.target = target;
        g.aux_count = aux;
        for (std::size_t i : picked) {
          g.applications.push_back(
              {s.constraints[ctx.candidates[i].constraint_index].name, ctx.candidates[i].indices});
        }
        return g;
      }
    }
  }
  return std::nullopt;
}

Formula reduce_3sat(const Formula& phi, const ConstraintSet& s,
                    const std::vector<Gadget>& library) {
  validate_formula(phi);
  // Match gadgets to phi's constraints by truth table; every used gadget
  // must be a verified perfect implementation over s.
  std::vector<const Gadget*> gadget_of(phi.set.constraints.size(), nullptr);
  for (std::size_t ci = 0; ci < phi.set.constraints.size(); ++ci) {
    const Constraint& c = phi.set.constraints[ci];
    const bool used = std::any_of(phi.applications.begin(), phi.applications.end(),
                                  [&](const WeightedApplication& wa) {
                                    return wa.app.constraint == c.name;
                                  });
    if (!used) continue;
    for (const Gadget& g : library) {
      if (g.target.arity == c.arity && g.target.table == c.table) {
        gadget_of[ci] = &g;
        break;
      }
    }
    if (!gadget_of[ci]) {
      throw UsageError("gadget library has no entry for constraint pattern " + c.name);
    }
    if (!verify_perfect(*gadget_of[ci], s)) {
      throw UsageError("library gadget for " + c.name + " is not a perfect implementation");
    }
  }

  Formula out;
  out.set = s;
  out.num_vars = phi.num_vars;
  for (const auto& wa : phi.applications) {
    std::size_t ci = 0;
    while (phi.set.constraints[ci].name != wa.app.constraint) ++ci;
    const Gadget& g = *gadget_of[ci];
    // Fresh auxiliary block per application instance.
    const int aux_base = out.num_vars;
    out.num_vars += g.aux_count;
    for (const ConstraintApplication& gapp : g.applications) {
      ConstraintApplication expanded;
      expanded.constraint = gapp.constraint;
      for (int idx : gapp.indices) {
        expanded.indices.push_back(idx <= g.target.arity
                                       ? wa.app.indices[static_cast<std::size_t>(idx - 1)]
                                       : aux_base + (idx - g.target.arity));
      }
      out.applications.push_back({std::move(expanded), wa.weight});
    }
  }
  return out;
}

Constraint or3_pattern(bool neg1, bool neg2, bool neg3) {
  const bool neg[3] = {neg1, neg2, neg3};
  std::string bits(8, '0');
  for (std::uint32_t p = 0; p < 8; ++p) {
    bool value = false;
    for (int j = 0; j < 3; ++j) {
      const bool v = (p >> j) & 1u;
      value = value || (v != neg[j]);
    }
    if (value) bits[p] = '1';
  }
  std::string name = "OR3_";
  for (int j = 0; j < 3; ++j) name += neg[j] ? 'N' : 'P';
  return make_constraint(name, 3, bits);
}

Constraint one_in_three_constraint() {
  return make_constraint("ONE_IN_THREE", 3, "01101000");
}

Gadget or3_gadget_over_one_in_three(bool neg1, bool neg2, bool neg3) {
  // The clause l1 | l2 | l3 holds iff the chain
  //   R(~l1, a, b), R(b, l2, c), R(c, d, ~l3)
  // with R = exactly-one-of-three is satisfiable over a, b, c, d. The clause
  // is symmetric, so the literals are permuted across the three slots to
  // minimize NOT stages (slots 1 and 3 consume complemented literals, slot 2
  // a plain one). A NOT stage is R(x, nx, f) with f pinned false by
  // R(f, f, t).
  const bool neg[3] = {neg1, neg2, neg3};
  int best_cost = 4;
  int order[3] = {0, 1, 2};
  int perm[3] = {0, 1, 2};
  do {
    const int cost = (neg[perm[0]] ? 0 : 1) + (neg[perm[1]] ? 1 : 0) + (neg[perm[2]] ? 0 : 1);
    if (cost < best_cost) {
      best_cost = cost;
      std::copy(perm, perm + 3, order);
    }
  } while (std::next_permutation(perm, perm + 3));

  Gadget g;
  g.target = or3_pattern(neg1, neg2, neg3);
  const int r = 3;
  int next_aux = r;
  const auto fresh = [&] { return ++next_aux; };

  int f = 0;
  std::vector<ConstraintApplication> not_stages;
  const auto negated_var = [&](int var) {
    if (f == 0) {
      f = fresh();
      const int t = fresh();
      not_stages.push_back({"ONE_IN_THREE", {f, f, t}});
    }
    const int nv = fresh();
    not_stages.push_back({"ONE_IN_THREE", {var, nv, f}});
    return nv;
  };

  const int slot1 = neg[order[0]] ? order[0] + 1 : negated_var(order[0] + 1);
  const int slot2 = neg[order[1]] ? negated_var(order[1] + 1) : order[1] + 1;
  const int slot3 = neg[order[2]] ? order[2] + 1 : negated_var(order[2] + 1);
  const int a = fresh();
  const int b = fresh();
  const int c = fresh();
  const int d = fresh();

  g.applications = std::move(not_stages);
  g.applications.push_back({"ONE_IN_THREE", {slot1, a, b}});
  g.applications.push_back({"ONE_IN_THREE", {b, slot2, c}});
  g.applications.push_back({"ONE_IN_THREE", {c, d, slot3}});
  g.aux_count = next_aux - r;
  return g;
}

}  // namespace schaefer
