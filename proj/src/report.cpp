#include "isolation/report.hpp"

namespace isolation {

Json to_json(const TargetPattern& t) {
  if (t.is_cycle()) return Json{{"kind", "cycle"}, {"k", nullptr}};
  return Json{{"kind", "kclique"}, {"k", t.k()}};
}

TargetPattern target_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cycle") return TargetPattern::cycle();
  if (kind == "kclique") return TargetPattern::clique(j.at("k").get<int>());
  throw Error("unknown target kind '" + kind + "'");
}

Json to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["class"] = cert.passed() ? Json(nullptr) : Json(cert.class_index);
  j["witness"] = cert.witness;
  j["target"] = to_json(cert.target);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "PASS") {
    cert.verdict = Verdict::Pass;
  } else if (verdict == "FAIL") {
    cert.verdict = Verdict::Fail;
  } else {
    throw Error("unknown verdict '" + verdict + "'");
  }
  cert.class_index = j.at("class").is_null() ? 0 : j.at("class").get<int>();
  cert.witness = j.at("witness").get<std::vector<Vertex>>();
  cert.target = target_from_json(j.at("target"));
  return cert;
}

Json to_json(const Coloring& c) { return Json{{"classes", c.classes()}, {"colors", c.colors()}}; }

Coloring coloring_from_json(const Json& j) {
  return Coloring(j.at("colors").get<std::vector<int>>(), j.at("classes").get<int>());
}

Json to_json(VertexSet s) { return s.to_vector(); }

VertexSet vertex_set_from_json(const Json& j) {
  VertexSet out;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex " + std::to_string(v) + " out of range");
    out.insert(v);
  }
  return out;
}

Json to_json(const ProofGapReport& report) {
  Json j;
  j["graph6"] = report.graph6;
  j["k"] = report.k == 0 ? Json(nullptr) : Json(report.k);
  j["stage"] = report.stage;
  j["detail"] = report.detail;
  j["scope"] = to_json(report.scope);
  j["coloring"] = report.coloring;
  j["failure"] = to_json(report.failure);
  return j;
}

}  // namespace isolation
