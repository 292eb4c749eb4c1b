#include "prodint/report.hpp"

#include <sstream>

#include <json.hpp>

namespace prodint {

namespace {

std::string node_tag(const cfg &g, int node) {
  std::ostringstream os;
  os << "node " << node;
  if (node == g.entry)
    os << " [entry]";
  if (node == g.exit)
    os << " [exit]";
  if (g.loop_heads.count(node))
    os << " [loop-head]";
  auto it = g.node_pos.find(node);
  if (it != g.node_pos.end() && it->second.line > 0)
    os << " @" << it->second.line << ":" << it->second.col;
  return os.str();
}

} // namespace

std::string render_text(const report_input &in) {
  std::ostringstream os;
  os << "program: " << in.program_path << "\n";
  os << "config: " << in.config->str() << "\n";
  os << "points:\n";
  for (int n = 0; n < in.graph->num_nodes; ++n)
    os << "  " << node_tag(*in.graph, n) << ": " << in.result->state_str(n)
       << "\n";
  os << "obligations:\n";
  for (const obligation_verdict &o : in.result->obligations)
    os << "  line " << o.site.pos.line << " col " << o.site.pos.col << " "
       << o.site.kind_str() << " (" << o.site.c.str()
       << "): " << o.verdict_str() << "\n";
  os << "iterations: " << in.result->node_visits << "\n";
  os << "counters:";
  for (auto &[k, v] : in.result->counters.counts)
    os << " " << k << "=" << v;
  os << "\n";
  if (in.soundness) {
    os << "oracle: " << (in.soundness->ok() ? "consistent" : "VIOLATIONS")
       << " (" << in.soundness->checks << " checks)\n";
    for (const std::string &v : in.soundness->violations)
      os << "  violation: " << v << "\n";
  }
  return os.str();
}

std::string render_json(const report_input &in) {
  nlohmann::json j;
  j["program"] = in.program_path;
  j["config"] = in.config->str();

  nlohmann::json points = nlohmann::json::array();
  for (int n = 0; n < in.graph->num_nodes; ++n) {
    nlohmann::json p;
    p["node"] = n;
    p["state"] = in.result->state_str(n);
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);

  nlohmann::json obls = nlohmann::json::array();
  for (const obligation_verdict &o : in.result->obligations) {
    nlohmann::json e;
    e["line"] = o.site.pos.line;
    e["col"] = o.site.pos.col;
    e["kind"] = o.site.kind_str();
    e["cond"] = o.site.c.str();
    e["verdict"] = o.verdict_str();
    obls.push_back(std::move(e));
  }
  j["obligations"] = std::move(obls);

  nlohmann::json counters;
  for (auto &[k, v] : in.result->counters.counts)
    counters[k] = v;
  j["counters"] = std::move(counters);
  j["iterations"] = in.result->node_visits;

  if (in.soundness) {
    nlohmann::json s;
    s["consistent"] = in.soundness->ok();
    s["checks"] = in.soundness->checks;
    s["violations"] = in.soundness->violations;
    j["oracle"] = std::move(s);
  }
  return j.dump(2) + "\n";
}

} // namespace prodint
