#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <infranil/crystal.hpp>
#include <infranil/errors.hpp>
#include <infranil/nielsen.hpp>
#include <infranil/numtheory.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// One equivalence class of holonomy elements at a fixed iterate level.
/// All fixed point classes above it share the determinant, essentiality,
/// and boosting behaviour.
struct EquivClass {
  unsigned long level = 1;
  std::vector<int> members;  // ascending holonomy indices
  int representative = 0;    // smallest member
  bool essential = false;
  Rational det;              // det(I - A D^level), constant on the class
  Integer class_count;       // essential fixed point classes above the class
  Integer irreducible_count; // ... that are irreducible at this level
};

using LevelClassTable = std::vector<EquivClass>;

/// Partition of the holonomy group at level k, classes ordered by smallest
/// member. Uses the coset closure B ~ A iff B in C*A*f_#(C)^{-1} for some C.
inline LevelClassTable equivalence_classes(const CrystalGroup& g, const SelfMapData& f,
                                           unsigned long k) {
  if (k == 0) throw std::domain_error("level must be positive");
  const std::size_t n = g.order();
  const std::vector<int> phik = induced_holonomy_power(g, f, k);
  const std::vector<int> subgroup = image_subgroup_for_iterate(g, f, k);

  // f_#^{(k)}(C)^{-1} per holonomy element.
  std::vector<std::vector<int>> coset_inverses(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::set<int> inv_set;
    for (int s : subgroup) inv_set.insert(g.inv[g.mult[phik[c]][s]]);
    coset_inverses[c].assign(inv_set.begin(), inv_set.end());
  }

  LevelClassTable table;
  std::vector<bool> assigned(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::set<int> members{static_cast<int>(a)};
    std::vector<int> queue{static_cast<int>(a)};
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (std::size_t c = 0; c < n; ++c) {
        const int cx = g.mult[c][x];
        for (int s_inv : coset_inverses[c]) {
          const int candidate = g.mult[cx][s_inv];
          if (members.insert(candidate).second) queue.push_back(candidate);
        }
      }
    }
    EquivClass cls;
    cls.level = k;
    cls.members.assign(members.begin(), members.end());
    cls.representative = cls.members.front();
    cls.det = iterate_det(g, f, cls.representative, k);
    for (int m : cls.members) {
      assigned[m] = true;
      if (iterate_det(g, f, m, k) != cls.det)
        throw StructureError("determinant is not constant on an equivalence class");
    }
    cls.essential = cls.det != 0;
    const Rational count =
        Rational(static_cast<unsigned long>(cls.members.size())) * abs(cls.det) /
        Rational(static_cast<unsigned long>(n));
    if (!is_integer(count))
      throw StructureError("class Nielsen count is not an integer: input data is inconsistent");
    cls.class_count = count.get_num();
    table.push_back(std::move(cls));
  }
  return table;
}

/// Class Nielsen count N_A(f^n) for the class containing the given element.
inline Integer class_nielsen(const CrystalGroup& g, const SelfMapData& f, unsigned long n,
                             int a_index) {
  for (const EquivClass& cls : equivalence_classes(g, f, n))
    for (int m : cls.members)
      if (m == a_index) return cls.class_count;
  throw std::domain_error("holonomy index out of range");
}

/// Rotational parts reachable by boosting the given element from level k to
/// level n (k | n): A * phi^k(A) * phi^(2k)(A) * ... * phi^(n-k)(A), a
/// singleton when the lift's linear part is invertible.
inline std::vector<int> boost_class(const CrystalGroup& g, const SelfMapData& f, unsigned long k,
                                    int a_index, unsigned long n) {
  if (k == 0 || n % k != 0) throw std::domain_error("boost needs levels with k | n");
  if (f.invertible) {
    int acc = a_index;
    for (unsigned long j = k; j < n; j += k) acc = g.mult[acc][induced_holonomy_power(g, f, j)[a_index]];
    return {acc};
  }
  std::set<int> acc{a_index};
  for (unsigned long j = k; j < n; j += k) {
    const std::vector<int> phij = induced_holonomy_power(g, f, j);
    const std::vector<int> subgroup = image_subgroup_for_iterate(g, f, j);
    std::set<int> next;
    for (int x : acc)
      for (int s : subgroup) next.insert(g.mult[x][g.mult[phij[a_index]][s]]);
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

struct BoostEdge {
  unsigned long from_level = 1, to_level = 1;
  std::size_t from_class = 0, to_class = 0;
  bool target_essential = false;
};

/// Everything the divisor recursion produces for one top level n.
struct PeriodicReport {
  unsigned long n = 1;
  std::vector<unsigned long> divisors;
  std::map<unsigned long, Integer> nielsen;        // N(f^k) per k | n
  std::map<unsigned long, LevelClassTable> tables; // irreducible_count filled in
  std::vector<BoostEdge> edges;                    // one per class and level pair k | n'
  std::map<unsigned long, Integer> iib;            // #IIB_k per k | n
  std::map<unsigned long, Integer> nf;             // NF_k
  std::map<unsigned long, Integer> np;             // NP_k
};

inline PeriodicReport analyze_periodic(const CrystalGroup& g, const SelfMapData& f,
                                       unsigned long n) {
  if (n == 0) throw std::domain_error("iterate level must be positive");
  PeriodicReport report;
  report.n = n;
  report.divisors = divisors(n);

  for (unsigned long k : report.divisors) {
    report.tables[k] = equivalence_classes(g, f, k);
    report.nielsen[k] = nielsen_number(g, f, k);
    Integer sum = 0;
    for (const EquivClass& cls : report.tables[k]) sum += cls.class_count;
    if (sum != report.nielsen[k])
      throw StructureError("class counts do not partition the Nielsen number");
  }

  auto class_of = [&](unsigned long level, int member) -> std::size_t {
    const LevelClassTable& table = report.tables.at(level);
    for (std::size_t i = 0; i < table.size(); ++i)
      for (int m : table[i].members)
        if (m == member) return i;
    throw StructureError("holonomy element missing from class table");
  };

  for (unsigned long k : report.divisors)
    for (unsigned long to : report.divisors) {
      if (to <= k || to % k != 0) continue;
      const LevelClassTable& from_table = report.tables.at(k);
      for (std::size_t ci = 0; ci < from_table.size(); ++ci) {
        const std::vector<int> image = boost_class(g, f, k, from_table[ci].representative, to);
        const std::size_t target = class_of(to, image.front());
        for (int b : image)
          if (class_of(to, b) != target)
            throw StructureError("boost not class-well-defined");
        if (!f.invertible)
          for (int m : from_table[ci].members)
            for (int b : boost_class(g, f, k, m, to))
              if (class_of(to, b) != target)
                throw StructureError("boost not class-well-defined");
        const bool target_essential = report.tables.at(to)[target].essential;
        if (!from_table[ci].essential && target_essential)
          throw StructureError("essential reducibility violated: essential class reduces to an "
                               "inessential one");
        report.edges.push_back({k, to, ci, target, target_essential});
      }
    }

  auto edge_target = [&](unsigned long from, std::size_t ci, unsigned long to) -> const BoostEdge& {
    for (const BoostEdge& e : report.edges)
      if (e.from_level == from && e.from_class == ci && e.to_level == to) return e;
    throw StructureError("missing boost edge");
  };

  // Irreducible essential counts, ascending through the divisors: subtract
  // everything that boosts in with an essential target; those boosts are a
  // bijection onto the reducible essential classes.
  for (unsigned long k : report.divisors) {
    LevelClassTable& table = report.tables.at(k);
    for (std::size_t ci = 0; ci < table.size(); ++ci) {
      Integer count = table[ci].class_count;
      for (unsigned long d : report.divisors) {
        if (d >= k || k % d != 0) continue;
        const LevelClassTable& lower = report.tables.at(d);
        for (std::size_t bi = 0; bi < lower.size(); ++bi) {
          const BoostEdge& e = edge_target(d, bi, k);
          if (e.to_class == ci && table[ci].essential) count -= lower[bi].irreducible_count;
        }
      }
      if (count < 0)
        throw StructureError("structural invariant violated: negative irreducible class count");
      table[ci].irreducible_count = count;
    }
  }

  for (unsigned long k : report.divisors) {
    Integer inessentially_boosted = 0;
    for (unsigned long d : report.divisors) {
      if (d >= k || k % d != 0) continue;
      const LevelClassTable& lower = report.tables.at(d);
      for (std::size_t bi = 0; bi < lower.size(); ++bi)
        if (!edge_target(d, bi, k).target_essential)
          inessentially_boosted += lower[bi].irreducible_count;
    }
    report.iib[k] = inessentially_boosted;
    report.nf[k] = report.nielsen[k] + inessentially_boosted;
  }

  for (unsigned long k : report.divisors) {
    Integer by_moebius = 0;
    for (unsigned long d : report.divisors) {
      if (k % d != 0) continue;
      by_moebius += Integer(moebius(k / d)) * report.nf.at(d);
    }
    Integer direct = 0;
    for (const EquivClass& cls : report.tables.at(k)) direct += cls.irreducible_count;
    if (by_moebius != direct)
      throw StructureError("prime periodic count mismatch between Moebius inversion and direct "
                           "irreducible-class count");
    report.np[k] = direct;
  }

  Integer np_sum = 0;
  for (unsigned long k : report.divisors) np_sum += report.np.at(k);
  if (np_sum != report.nf.at(n))
    throw StructureError("sum of prime periodic counts does not reproduce the full count");
  return report;
}

inline Integer iib(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  return analyze_periodic(g, f, n).iib.at(n);
}

inline Integer nf(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  return analyze_periodic(g, f, n).nf.at(n);
}

inline Integer np(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  return analyze_periodic(g, f, n).np.at(n);
}

enum class GraphFormat { dot, json };

/// Boosting graph over all levels dividing n. Squares are essential classes,
/// ellipses inessential ones, matching the usual schematic drawings.
inline std::string export_boost_graph(const CrystalGroup& g, const SelfMapData& f,
                                      unsigned long n, GraphFormat format) {
  const PeriodicReport report = analyze_periodic(g, f, n);
  auto node_name = [&](unsigned long level, std::size_t ci) {
    return "L" + std::to_string(level) + "_" +
           std::to_string(report.tables.at(level)[ci].representative);
  };

  if (format == GraphFormat::dot) {
    std::ostringstream os;
    os << "digraph boosting {\n  rankdir=LR;\n";
    for (unsigned long k : report.divisors) {
      const LevelClassTable& table = report.tables.at(k);
      for (std::size_t ci = 0; ci < table.size(); ++ci) {
        os << "  " << node_name(k, ci) << " [shape=" << (table[ci].essential ? "box" : "ellipse")
           << ", label=\"" << node_name(k, ci) << " N_A=" << table[ci].class_count.get_str()
           << "\"];\n";
      }
    }
    for (const BoostEdge& e : report.edges)
      os << "  " << node_name(e.from_level, e.from_class) << " -> "
         << node_name(e.to_level, e.to_class) << " [label=\""
         << (e.target_essential ? "ess" : "iness") << "\"];\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::json doc;
  doc["n"] = n;
  doc["levels"] = report.divisors;
  doc["nodes"] = nlohmann::json::array();
  for (unsigned long k : report.divisors) {
    const LevelClassTable& table = report.tables.at(k);
    for (std::size_t ci = 0; ci < table.size(); ++ci) {
      nlohmann::json node;
      node["id"] = node_name(k, ci);
      node["level"] = k;
      node["representative"] = table[ci].representative;
      node["members"] = table[ci].members;
      node["essential"] = table[ci].essential;
      node["class_nielsen"] = table[ci].class_count.get_str();
      node["irreducible"] = table[ci].irreducible_count.get_str();
      doc["nodes"].push_back(std::move(node));
    }
  }
  doc["edges"] = nlohmann::json::array();
  for (const BoostEdge& e : report.edges) {
    nlohmann::json edge;
    edge["source"] = node_name(e.from_level, e.from_class);
    edge["target"] = node_name(e.to_level, e.to_class);
    edge["essential_target"] = e.target_essential;
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

}  // namespace infranil
