#include "virtcheck.hpp"

#include "explorer.hpp"

namespace kmc {

nlohmann::json VirtualizationSweep::to_json() const {
  nlohmann::json j;
  j["nodes_checked"] = nodes_checked;
  j["checks_run"] = checks_run;
  j["passed"] = passed();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : violations)
    list.push_back({{"node", v.node},
                    {"index", v.index},
                    {"kind", v.kind},
                    {"detail", v.detail}});
  j["violations"] = std::move(list);
  return j;
}

VirtualizationSweep run_virtualization_sweep(CartanPtr cartan, Int depth) {
  Symmetrizer d = symmetrize(*cartan);
  FoldedDiagram fd = build_folding(*cartan, d);

  GenerateOptions options;
  options.depth = depth;
  CrystalGraph graph = generate(cartan, std::nullopt, options);

  VirtualizationSweep sweep;
  auto flag = [&](const RiggedConfiguration& rc, size_t a,
                  const std::string& kind, const std::string& detail) {
    if (sweep.violations.size() < 100)
      sweep.violations.push_back(SweepViolation{
          rc.canonical_key(), a == SIZE_MAX ? "" : cartan->label(a), kind,
          detail});
  };

  for (const auto& rc : graph.nodes) {
    ++sweep.nodes_checked;
    RiggedConfiguration vrc = virtualize(rc, fd);

    ++sweep.checks_run;
    if (!is_in_virtual_image(vrc, fd))
      flag(rc, SIZE_MAX, "image", "v(rc) violates the membership conditions");

    ++sweep.checks_run;
    {
      Weight expect = weight_embed(fd, rc.weight());
      if (!(vrc.weight() == expect))
        flag(rc, SIZE_MAX, "weight", "wt(v(rc)) differs from Psi(wt(rc))");
    }

    for (size_t a = 0; a < cartan->rank(); ++a) {
      ++sweep.checks_run;
      for (size_t b : fd.orbits[a]) {
        if (vrc.epsilon(b) != fd.gamma[a] * rc.epsilon(a)) {
          flag(rc, a, "epsilon",
               "epsilon at " + fd.vertex_label(b) +
                   " is not gamma * epsilon_a");
          break;
        }
        if (vrc.phi(b) != fd.gamma[a] * rc.phi(a)) {
          flag(rc, a, "phi",
               "phi at " + fd.vertex_label(b) + " is not gamma * phi_a");
          break;
        }
      }

      ++sweep.checks_run;
      {
        auto fr = rc.f(a);
        auto vf = virtual_f(vrc, fd, a);
        if (fr.has_value() != vf.has_value())
          flag(rc, a, "f_null", "f_a and f_a^v disagree on annihilation");
        else if (fr && !(virtualize(*fr, fd) == *vf))
          flag(rc, a, "f_commute", "v(f_a(rc)) differs from f_a^v(v(rc))");
      }

      ++sweep.checks_run;
      {
        auto er = rc.e(a);
        auto ve = virtual_e(vrc, fd, a);
        if (er.has_value() != ve.has_value())
          flag(rc, a, "e_null", "e_a and e_a^v disagree on annihilation");
        else if (er && !(virtualize(*er, fd) == *ve))
          flag(rc, a, "e_commute", "v(e_a(rc)) differs from e_a^v(v(rc))");
      }
    }
  }
  return sweep;
}

}  // namespace kmc
