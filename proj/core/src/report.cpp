#include "gamma0fd/report.hpp"

#include <json.hpp>

#include "gamma0fd/cusps.hpp"
#include "gamma0fd/domain.hpp"

namespace gamma0fd {

using ordered_json = nlohmann::ordered_json;

std::string width_json(modulus n) {
  const width_table wt = build_width_table(n);
  ordered_json doc;
  doc["n"] = n.n;
  doc["psi"] = psi_index(n.n);
  ordered_json entries = ordered_json::array();
  for (i64 j = 0; j < n.n; ++j) {
    ordered_json e;
    e["j"] = j;
    e["W"] = wt.at(j);
    e["M"] = wt.max_exp(j);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  doc["schema"] = report_schema;
  return doc.dump();
}

std::string cosets_json(const coset_table& t) {
  ordered_json doc;
  doc["n"] = t.n;
  ordered_json reps = ordered_json::array();
  for (const coset_rep& r : t.reps) {
    ordered_json e;
    if (r.form == coset_rep::shape::st) {
      e["type"] = "I";
      e["i"] = r.t1;
    } else {
      e["type"] = "J";
      e["j"] = r.t1;
      e["m"] = r.t2;
    }
    e["word"] = r.str();
    reps.push_back(std::move(e));
  }
  doc["reps"] = std::move(reps);
  doc["schema"] = report_schema;
  return doc.dump();
}

std::string cusps_json(const coset_table& t) {
  const modulus n = t.mod();
  ordered_json doc;
  doc["n"] = t.n;
  ordered_json classes = ordered_json::array();
  for (const auto& [cl, members] : classify_domain_cusps(t)) {
    ordered_json c;
    c["d"] = cl.d;
    c["b"] = cl.b;
    c["width"] = class_width(cl, n);
    ordered_json ms = ordered_json::array();
    for (const domain_cusp& m : members) {
      ordered_json e;
      if (m.rep.form == coset_rep::shape::st)
        e["i"] = m.index;
      else
        e["j"] = m.index;
      e["W"] = m.weight;
      e["cusp"] = cusp_str(m.s);
      ms.push_back(std::move(e));
    }
    c["members"] = std::move(ms);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  doc["schema"] = report_schema;
  return doc.dump();
}

std::string arcs_json(const coset_table& t) {
  ordered_json doc;
  doc["n"] = t.n;
  const std::vector<boundary_arc> arcs = boundary_arcs(t);
  doc["count"] = arcs.size();
  ordered_json list = ordered_json::array();
  for (const boundary_arc& a : arcs) {
    ordered_json e;
    e["arc"] = a.str();
    e["word"] = a.rep.str();
    e["edge"] = std::string(1, edge_letter(a.edge));
    e["ray"] = a.ray;
    list.push_back(std::move(e));
  }
  doc["arcs"] = std::move(list);
  doc["schema"] = report_schema;
  return doc.dump();
}

namespace {

ordered_json matrix_json(const mat2& g) {
  return ordered_json::array({ordered_json::array({g.a, g.b}), ordered_json::array({g.c, g.d})});
}

}  // namespace

std::string gluing_json(const coset_table& t) {
  ordered_json doc;
  doc["n"] = t.n;
  ordered_json list = ordered_json::array();
  for (const gluing_pair& p : glue(t)) {
    ordered_json e;
    e["arc1"] = p.arc1.str();
    e["arc2"] = p.arc2.str();
    e["g"] = matrix_json(p.g);
    list.push_back(std::move(e));
  }
  doc["pairs"] = std::move(list);
  ordered_json rays;
  ordered_json ray_arcs = ordered_json::array();
  for (const boundary_arc& a : boundary_arcs(t))
    if (a.ray) ray_arcs.push_back(a.str());
  rays["arcs"] = std::move(ray_arcs);
  rays["identified_by"] = matrix_json(mat2::gen_t());
  doc["rays"] = std::move(rays);
  doc["schema"] = report_schema;
  return doc.dump();
}

std::string genus_json(const coset_table& t) {
  const surface_data s = compute_genus(t);
  ordered_json doc;
  doc["n"] = t.n;
  doc["genus"] = s.genus;
  doc["faces"] = s.faces;
  doc["edges"] = s.edges;
  doc["vertices"] = s.vertices;
  doc["schema"] = report_schema;
  return doc.dump();
}

}  // namespace gamma0fd
