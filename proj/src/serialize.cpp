#include "gp/serialize.hpp"

namespace gp {

nlohmann::ordered_json group_json(const GroupDescriptor& G) {
  nlohmann::ordered_json j;
  switch (G.kind()) {
    case GroupKind::finite_cyclic:
      j["kind"] = "C";
      j["n"] = G.order();
      break;
    case GroupKind::integers:
      j["kind"] = "Z";
      break;
    case GroupKind::finite_table: {
      j["kind"] = "table";
      std::vector<std::vector<long long>> mul;
      for (long long r = 0; r < G.order(); ++r) {
        mul.emplace_back();
        for (long long c = 0; c < G.order(); ++c)
          mul.back().push_back(G.multiply(r, c));
      }
      j["mul"] = mul;
      break;
    }
  }
  return j;
}

nlohmann::ordered_json spec_json(const GraphProductSpec& spec) {
  const SimplicialGraph& gr = spec.graph();
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < gr.vertex_count(); ++v) {
    nlohmann::ordered_json vj;
    vj["name"] = gr.vertex_name(v);
    vj["group"] = group_json(spec.group(v));
    j["vertices"].push_back(vj);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (int v = 0; v < gr.vertex_count(); ++v)
    for (int w : gr.neighbors(v))
      if (v < w) j["edges"].push_back({gr.vertex_name(v), gr.vertex_name(w)});
  return j;
}

} // namespace gp
