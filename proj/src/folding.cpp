#include "folding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kmc {

size_t FoldedDiagram::vertex_index(size_t orbit, Int shift) const {
  for (size_t v : orbits.at(orbit))
    if (vertices[v].shift == shift) return v;
  throw Error(ErrorCode::UnknownIndex, "no such virtual vertex");
}

std::string FoldedDiagram::vertex_label(size_t v) const {
  return base->label(vertices.at(v).orbit) + "," +
         std::to_string(vertices.at(v).shift);
}

bool FoldedDiagram::has_edge(size_t u, size_t v) const {
  auto key = std::minmax(u, v);
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(key.first, key.second));
}

std::vector<size_t> FoldedDiagram::automorphism() const {
  std::vector<size_t> perm(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) {
    const auto& vert = vertices[v];
    Int size = static_cast<Int>(orbits[vert.orbit].size());
    perm[v] = vertex_index(vert.orbit, (vert.shift + 1) % size);
  }
  return perm;
}

nlohmann::json FoldedDiagram::to_json() const {
  nlohmann::json j;
  j["N"] = N;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : vertices)
    verts.push_back({base->label(v.orbit), v.shift});
  j["vertices"] = std::move(verts);
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [u, v] : edges) {
    es.push_back({{base->label(vertices[u].orbit), vertices[u].shift},
                  {base->label(vertices[v].orbit), vertices[v].shift}});
  }
  j["edges"] = std::move(es);
  j["virtual_cartan"] = virtual_cartan->to_json();
  nlohmann::json orbit_map = nlohmann::json::object();
  for (size_t v = 0; v < vertices.size(); ++v)
    orbit_map[vertex_label(v)] = base->label(vertices[v].orbit);
  j["orbit"] = std::move(orbit_map);
  nlohmann::json g = nlohmann::json::object();
  for (size_t a = 0; a < gamma.size(); ++a) g[base->label(a)] = gamma[a];
  j["gamma"] = std::move(g);
  return j;
}

std::string FoldedDiagram::to_dot() const {
  static const char* palette[] = {"darkred",    "blue",   "forestgreen",
                                  "darkorange", "purple", "teal",
                                  "deeppink",   "brown"};
  std::ostringstream os;
  os << "graph folding {\n  node [shape=circle, style=filled];\n";
  for (size_t v = 0; v < vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << vertex_label(v) << "\", color="
       << palette[vertices[v].orbit % (sizeof(palette) / sizeof(*palette))]
       << ", fontcolor=white];\n";
  }
  for (const auto& [u, v] : edges) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

FoldedDiagram build_folding(const CartanMatrix& cartan, const Symmetrizer& d) {
  const size_t n = cartan.rank();
  if (d.d.size() != n)
    throw Error(ErrorCode::InvalidArgument, "symmetrizer rank mismatch");

  // c_ab with c_ab * dtilde_a = -A_ba over the pairwise-reduced ratios;
  // the N terms -A_ab d_a / lcm(d_a, d_b) coincide with c_ab
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, 0));
  Int N = 1;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (a == b || !cartan.connected(a, b)) continue;
      Int g = std::gcd(d.d[a], d.d[b]);
      Int da_t = d.d[a] / g;
      if ((-cartan.at(b, a)) % da_t != 0)
        throw Error(ErrorCode::NonIntegralC,
                    "-A[" + cartan.label(b) + "][" + cartan.label(a) +
                        "] is not divisible by the reduced d_" +
                        cartan.label(a) + "; symmetrizer inconsistent with A");
      c[a][b] = -cartan.at(b, a) / da_t;
      N = std::max(N, c[a][b]);
    }
  }

  FoldedDiagram fd;
  fd.base = std::make_shared<CartanMatrix>(cartan);
  fd.N = N;
  fd.c = c;
  fd.gamma.assign(n, 1);
  fd.orbits.resize(n);
  for (size_t a = 0; a < n; ++a) {
    for (Int s = 0; s < N * d.d[a]; ++s) {
      fd.orbits[a].push_back(fd.vertices.size());
      fd.vertices.push_back(VirtualVertex{a, s});
    }
  }

  // One generating pass per unordered pair.  Running the reversed pass as
  // well and taking the union would overcount neighbors whenever
  // 1 < c_ab < N gcd(d_a, d_b), breaking E_ab = -A_ab; the reversed pass is
  // still computed and compared as a diagnostic.
  auto run_pass = [&](size_t a, size_t b) {
    std::map<std::pair<size_t, size_t>, Int> first_k;
    std::set<std::pair<size_t, size_t>> pass;
    for (Int k = 0; k < c[a][b]; ++k) {
      for (Int s = 0; s < N * d.d[a] * d.d[b]; ++s) {
        size_t u = fd.orbits[a][static_cast<size_t>(s % (N * d.d[a]))];
        size_t v = fd.orbits[b][static_cast<size_t>((s + k) % (N * d.d[b]))];
        auto key = std::minmax(u, v);
        auto edge = std::make_pair(key.first, key.second);
        auto [it, fresh] = first_k.emplace(edge, k);
        if (!fresh && it->second != k)
          throw Error(ErrorCode::MultiEdgeDetected,
                      "edge generated by two distinct offsets k=" +
                          std::to_string(it->second) + " and k=" +
                          std::to_string(k));
        pass.insert(edge);
      }
    }
    return pass;
  };

  std::set<std::pair<size_t, size_t>> edge_set;
  fd.passes_agree = true;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (!cartan.connected(a, b)) continue;
      auto pass = run_pass(a, b);
      if (run_pass(b, a) != pass) fd.passes_agree = false;
      edge_set.insert(pass.begin(), pass.end());
    }
  }
  fd.edges.assign(edge_set.begin(), edge_set.end());

  // induced simply-laced Cartan matrix
  std::vector<std::string> vlabels;
  for (size_t v = 0; v < fd.vertices.size(); ++v)
    vlabels.push_back(fd.vertex_label(v));
  std::vector<std::vector<Int>> ventries(
      fd.vertices.size(), std::vector<Int>(fd.vertices.size(), 0));
  for (size_t v = 0; v < fd.vertices.size(); ++v) ventries[v][v] = 2;
  for (const auto& [u, v] : fd.edges) {
    ventries[u][v] = -1;
    ventries[v][u] = -1;
  }
  fd.virtual_cartan = std::make_shared<CartanMatrix>(std::move(vlabels),
                                                     std::move(ventries));
  return fd;
}

FoldingReport verify_folding(const FoldedDiagram& fd,
                             const CartanMatrix& cartan) {
  if (!fd.base || *fd.base != cartan)
    throw Error(ErrorCode::InvalidArgument,
                "folding was not built from this Cartan matrix");
  FoldingReport report;
  auto add = [&](const std::string& name, bool ok, std::string detail) {
    report.checks.push_back(FoldingCheck{name, ok, std::move(detail)});
    report.passed = report.passed && ok;
  };

  {
    auto perm = fd.automorphism();
    bool ok = true;
    std::string detail;
    for (const auto& [u, v] : fd.edges) {
      if (!fd.has_edge(perm[u], perm[v])) {
        ok = false;
        detail = "edge {" + fd.vertex_label(u) + "," + fd.vertex_label(v) +
                 "} maps outside the edge set";
        break;
      }
    }
    for (size_t v = 0; ok && v < fd.vertices.size(); ++v)
      if (fd.vertices[perm[v]].orbit != fd.vertices[v].orbit) {
        ok = false;
        detail = "orbit not preserved at " + fd.vertex_label(v);
      }
    add("automorphism", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (size_t a = 0; ok && a < cartan.rank(); ++a) {
      for (size_t b = 0; ok && b < cartan.rank(); ++b) {
        if (a == b) continue;
        for (size_t u : fd.orbits[a]) {
          Int count = 0;
          for (size_t v : fd.orbits[b])
            if (fd.has_edge(u, v)) ++count;
          if (count != -cartan.at(a, b)) {
            ok = false;
            detail = "vertex " + fd.vertex_label(u) + " has " +
                     std::to_string(count) + " neighbors in orbit " +
                     cartan.label(b) + ", expected " +
                     std::to_string(-cartan.at(a, b));
            break;
          }
        }
      }
    }
    add("edge_counts", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (size_t a = 0; a < cartan.rank(); ++a)
      for (size_t b = 0; b < cartan.rank(); ++b)
        if (fd.c[a][b] > fd.N) {
          ok = false;
          detail = "c[" + cartan.label(a) + "][" + cartan.label(b) +
                   "] exceeds N";
        }
    add("c_bound", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& [u, v] : fd.edges)
      if (fd.vertices[u].orbit == fd.vertices[v].orbit) {
        ok = false;
        detail = "edge inside orbit " + cartan.label(fd.vertices[u].orbit);
        break;
      }
    add("orbit_independence", ok, detail);
  }

  return report;
}

nlohmann::json FoldingReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& check : checks)
    list.push_back({{"name", check.name},
                    {"passed", check.passed},
                    {"detail", check.detail}});
  j["checks"] = std::move(list);
  return j;
}

Weight weight_embed(const FoldedDiagram& fd, const Weight& w) {
  if (w.lambda.size() != fd.base->rank())
    throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  Weight out = Weight::zero(fd.vertices.size());
  for (size_t a = 0; a < fd.base->rank(); ++a) {
    for (size_t v : fd.orbits[a]) {
      out.lambda[v] = fd.gamma[a] * w.lambda[a];
      out.alpha[v] = fd.gamma[a] * w.alpha[a];
    }
  }
  return out;
}

Weight root_embed(const FoldedDiagram& fd, size_t a) {
  return weight_embed(fd, Weight::simple_root(fd.base->rank(), a));
}

RiggedConfiguration virtualize(const RiggedConfiguration& rc,
                               const FoldedDiagram& fd) {
  if (rc.rank() != fd.base->rank())
    throw Error(ErrorCode::InvalidArgument,
                "configuration rank does not match folding");
  std::vector<RiggedPartition> parts(fd.vertices.size());
  for (size_t a = 0; a < fd.base->rank(); ++a) {
    std::vector<RiggedString> scaled;
    for (const auto& s : rc.part(a).strings())
      scaled.push_back(
          RiggedString{fd.gamma[a] * s.length, fd.gamma[a] * s.rigging});
    for (size_t v : fd.orbits[a]) parts[v] = RiggedPartition(scaled);
  }
  std::optional<std::vector<Int>> vlambda;
  if (rc.highest_weight()) {
    vlambda.emplace(fd.vertices.size(), 0);
    for (size_t a = 0; a < fd.base->rank(); ++a)
      for (size_t v : fd.orbits[a])
        (*vlambda)[v] = fd.gamma[a] * (*rc.highest_weight())[a];
  }
  return RiggedConfiguration(fd.virtual_cartan, std::move(vlambda),
                             std::move(parts));
}

namespace {

struct ImageViolation {
  int condition;
  std::string detail;
};

std::optional<ImageViolation> check_virtual_image(
    const RiggedConfiguration& vrc, const FoldedDiagram& fd) {
  for (size_t a = 0; a < fd.base->rank(); ++a) {
    const auto& members = fd.orbits[a];
    const auto& first = vrc.part(members.front());
    for (size_t v : members) {
      if (!(vrc.part(v) == first))
        return ImageViolation{1, "parts differ inside orbit " +
                                     fd.base->label(a)};
    }
    for (const auto& s : first.strings()) {
      if (s.rigging % fd.gamma[a] != 0)
        return ImageViolation{2, "rigging " + std::to_string(s.rigging) +
                                     " not in gamma*Z in orbit " +
                                     fd.base->label(a)};
      if (s.length % fd.gamma[a] != 0)
        return ImageViolation{3, "string length " + std::to_string(s.length) +
                                     " not in gamma*Z in orbit " +
                                     fd.base->label(a)};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_in_virtual_image(const RiggedConfiguration& vrc,
                         const FoldedDiagram& fd) {
  if (vrc.rank() != fd.vertices.size())
    throw Error(ErrorCode::InvalidArgument,
                "configuration rank does not match virtual type");
  return !check_virtual_image(vrc, fd).has_value();
}

RiggedConfiguration devirtualize(const RiggedConfiguration& vrc,
                                 const FoldedDiagram& fd) {
  if (vrc.rank() != fd.vertices.size())
    throw Error(ErrorCode::InvalidArgument,
                "configuration rank does not match virtual type");
  if (auto bad = check_virtual_image(vrc, fd))
    throw Error(ErrorCode::NotInVirtualImage,
                "condition (" + std::to_string(bad->condition) + "): " +
                    bad->detail);
  std::vector<RiggedPartition> parts(fd.base->rank());
  for (size_t a = 0; a < fd.base->rank(); ++a) {
    std::vector<RiggedString> scaled;
    for (const auto& s : vrc.part(fd.orbits[a].front()).strings())
      scaled.push_back(
          RiggedString{s.length / fd.gamma[a], s.rigging / fd.gamma[a]});
    parts[a] = RiggedPartition(std::move(scaled));
  }
  std::optional<std::vector<Int>> lambda;
  if (vrc.highest_weight()) {
    lambda.emplace(fd.base->rank(), 0);
    for (size_t a = 0; a < fd.base->rank(); ++a) {
      Int expect = -1;
      for (size_t v : fd.orbits[a]) {
        Int coeff = (*vrc.highest_weight())[v];
        if (coeff % fd.gamma[a] != 0 || (expect >= 0 && coeff != expect))
          throw Error(ErrorCode::NotInVirtualImage,
                      "highest weight not orbit-constant in gamma*Z");
        expect = coeff;
      }
      (*lambda)[a] = expect / fd.gamma[a];
    }
  }
  return RiggedConfiguration(fd.base, std::move(lambda), std::move(parts));
}

namespace {

std::optional<RiggedConfiguration> apply_orbit_power(
    const RiggedConfiguration& vrc, const FoldedDiagram& fd, size_t a,
    bool lowering) {
  if (a >= fd.base->rank())
    throw Error(ErrorCode::UnknownIndex, "index out of range");
  RiggedConfiguration cur = vrc;
  for (size_t v : fd.orbits[a]) {
    for (Int t = 0; t < fd.gamma[a]; ++t) {
      auto next = lowering ? cur.f(v) : cur.e(v);
      if (!next) return std::nullopt;
      cur = std::move(*next);
    }
  }
  return cur;
}

}  // namespace

std::optional<RiggedConfiguration> virtual_f(const RiggedConfiguration& vrc,
                                             const FoldedDiagram& fd,
                                             size_t a) {
  return apply_orbit_power(vrc, fd, a, true);
}

std::optional<RiggedConfiguration> virtual_e(const RiggedConfiguration& vrc,
                                             const FoldedDiagram& fd,
                                             size_t a) {
  return apply_orbit_power(vrc, fd, a, false);
}

}  // namespace kmc
