#include "setopt/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "setopt/dini.hpp"
#include "setopt/instance_io.hpp"

namespace setopt {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string instance_hash(const Instance& inst) {
  char buf[17];
  // Only the map and its spaces: point and test-set overrides keep the hash.
  Instance bare;
  bare.name = inst.name;
  bare.map = inst.map;
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(export_instance(bare))));
  return buf;
}

std::string describe_set(const UpperSet& a) {
  if (a.is_empty()) return "empty";
  const UpperSet c = a.canonical();
  if (c.rows().empty()) return "Z";
  std::string out;
  for (const auto& h : c.rows()) {
    if (!out.empty()) out += "; ";
    for (const auto& v : h.normal) out += v.get_str() + " ";
    out += "<= " + h.offset.get_str();
  }
  return out;
}

namespace {

// Key-value output writes one "key=value" per line; values never contain newlines.
class Out {
 public:
  explicit Out(ReportFormat f) : fmt_(f) {}
  bool kv() const { return fmt_ == ReportFormat::Kv; }
  void kv_line(const std::string& key, const std::string& value) {
    if (kv()) os_ << key << '=' << value << '\n';
  }
  void text(const std::string& s) {
    if (!kv()) os_ << s << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  ReportFormat fmt_;
  std::ostringstream os_;
};

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

void header(Out& o, const Instance& inst, const Vec& x0, const std::string& search) {
  o.kv_line("instance", inst.name);
  o.kv_line("hash", instance_hash(inst));
  o.kv_line("x0", to_string(x0));
  o.kv_line("testset.size", std::to_string(inst.testset.points.size()));
  o.kv_line("search", search);
  o.text("instance " + inst.name + "  hash " + instance_hash(inst));
  o.text("x0 = " + to_string(x0) + "  |T| = " + std::to_string(inst.testset.points.size()) + "  search " + search);
}

void verdict_rows(Out& o, const std::vector<ConditionVerdict>& verdicts) {
  o.text("");
  o.text(pad("condition", 10) + pad("verdict", 8) + "witness");
  for (const auto& v : verdicts) {
    const std::string key = "verdict." + std::string(condition_name(v.id));
    std::string witness;
    if (v.witness_x) witness = "x=" + to_string(*v.witness_x);
    if (v.witness_zstar) witness += (witness.empty() ? "" : " ") + std::string("z*=") + to_string(*v.witness_zstar);
    std::string detail;
    if (v.witness_x)
      for (const auto& p : v.points)
        if (p.x == *v.witness_x) detail = p.clause.detail;
    o.kv_line(key, v.holds ? "HOLDS" : "FAILS");
    if (v.witness_x) o.kv_line(key + ".witness_x", to_string(*v.witness_x));
    if (v.witness_zstar) o.kv_line(key + ".witness_zstar", to_string(*v.witness_zstar));
    if (!detail.empty()) o.kv_line(key + ".detail", detail);
    if (!v.caveats.empty()) o.kv_line(key + ".caveats", join(v.caveats, ","));
    std::string line = pad(std::string(condition_name(v.id)), 10) + pad(v.holds ? "HOLDS" : "FAILS", 8) + witness;
    if (!detail.empty()) line += "  [" + detail + "]";
    if (!v.caveats.empty()) line += "  {" + join(v.caveats, ",") + "}";
    o.text(line);
  }
}

}  // namespace

std::string render_certify(const Instance& inst, const std::vector<ConditionVerdict>& verdicts, ReportFormat fmt) {
  Out o(fmt);
  header(o, inst, inst.x0, inst.search.describe());
  verdict_rows(o, verdicts);
  return o.str();
}

std::string render_harness(const Instance& inst, const HarnessReport& rep, ReportFormat fmt) {
  Out o(fmt);
  header(o, inst, rep.x0, rep.search);
  verdict_rows(o, rep.verdicts);
  o.text("");
  o.text(pad("group", 16) + pad("status", 15) + "edge");
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    const auto& e = rep.edges[i];
    const std::string key = "edge." + std::to_string(i);
    o.kv_line(key + ".label", e.label);
    o.kv_line(key + ".group", e.group);
    o.kv_line(key + ".status", std::string(edge_status_name(e.status)));
    if (!e.detail.empty()) o.kv_line(key + ".detail", e.detail);
    std::vector<std::string> chain;
    for (const auto& x : e.chain) chain.push_back(to_string(x));
    if (!chain.empty()) o.kv_line(key + ".chain", join(chain, " -> "));
    std::string line = pad(e.group, 16) + pad(std::string(edge_status_name(e.status)), 15) + e.label;
    if (e.status == EdgeStatus::Violation || e.status == EdgeStatus::Unresolved) {
      line += "  BUG: " + e.detail;
      if (!chain.empty()) line += "  chain " + join(chain, " -> ");
    }
    o.text(line);
  }
  if (!rep.probes.empty()) o.text("");
  for (const auto& p : rep.probes) {
    const std::string key = "probe." + std::string(probe_name(p.variant));
    o.kv_line(key, std::string(outcome_name(p.outcome)));
    o.text("probe " + pad(std::string(probe_name(p.variant)), 16) + std::string(outcome_name(p.outcome)) +
           " (sampled, " + std::to_string(p.samples) + " samples)" + (p.detail.empty() ? "" : "  " + p.detail));
  }
  const std::string counts = "pass=" + std::to_string(rep.count(EdgeStatus::Pass)) +
                             " transfer=" + std::to_string(rep.count(EdgeStatus::PassTransfer)) +
                             " violation=" + std::to_string(rep.count(EdgeStatus::Violation)) +
                             " unresolved=" + std::to_string(rep.count(EdgeStatus::Unresolved)) +
                             " skipped=" + std::to_string(rep.count(EdgeStatus::Skipped));
  o.kv_line("edges", counts);
  o.kv_line("mvi_without_min", rep.mvi_without_min ? "yes" : "no");
  o.text("");
  o.text("edges: " + counts);
  if (rep.mvi_without_min) o.text("interesting: mvi_M holds while Min fails on T");
  return o.str();
}

std::string render_derive(const Instance& inst, const Vec& x, const Vec& u, ReportFormat fmt) {
  const HFamilyMap& f = *inst.map;
  Out o(fmt);
  o.kv_line("instance", inst.name);
  o.kv_line("hash", instance_hash(inst));
  o.kv_line("x", to_string(x));
  o.kv_line("u", to_string(u));
  o.text("instance " + inst.name + "  hash " + instance_hash(inst));
  o.text("x = " + to_string(x) + "  u = " + to_string(u));
  const SetDerivative d = set_dini(f, x, u);
  o.kv_line("derivative", describe_set(d.value));
  if (d.outside_domain) o.kv_line("derivative.note", "x outside dom f");
  o.text("f'(x,u) = " + describe_set(d.value) + (d.outside_domain ? "  (x outside dom f)" : ""));
  o.text("");
  o.text(pad("z*", 24) + "phi'(x,u)");
  for (const auto& v : regularity_functionals(f)) {
    const ExtReal s = scalar_dini(f, v, x, u);
    o.kv_line("phi'." + to_string(v), s.str());
    o.text(pad(to_string(v), 24) + s.str());
  }
  const SrVerdict sr = check_SR(f, x, u);
  const WrVerdict wr = check_WR(f, x, u);
  o.kv_line("SR", sr.pass ? "PASS" : "FAIL");
  o.kv_line("SR.inequality", sr.inequality_holds ? "PASS" : "FAIL");
  o.kv_line("WR", wr.pass ? "PASS" : "FAIL");
  o.text("");
  o.text(std::string("SR ") + (sr.pass ? "PASS" : "FAIL") + "  WR " + (wr.pass ? "PASS" : "FAIL") +
         "  phi' <= -sigma " + (sr.inequality_holds ? "PASS" : "FAIL"));
  for (const auto& e : sr.entries)
    if (!e.equal) o.text("  SR differs at z*=" + to_string(e.zstar) + ": " + e.scalar.str() + " vs " + e.set_value.str());
  return o.str();
}

std::string render_campaign(const CampaignOptions& opts, const CampaignSummary& s, ReportFormat fmt) {
  Out o(fmt);
  const std::vector<std::pair<std::string, int>> rows{
      {"instances", s.instances},           {"edges_checked", s.edges_checked},
      {"violations", s.violations},         {"transfers", s.transfers},
      {"unresolved", s.unresolved},         {"skipped", s.skipped},
      {"constancy_checks", s.constancy_checks}, {"mvi_without_min", s.mvi_without_min},
      {"psi_instances", s.psi_instances},   {"sr_checks_on_psi", s.sr_checks_on_psi},
      {"sr_failures_on_psi", s.sr_failures_on_psi}, {"inequality_checks", s.inequality_checks},
      {"inequality_failures", s.inequality_failures}};
  o.kv_line("seed", std::to_string(opts.seed));
  o.kv_line("count", std::to_string(opts.count));
  o.text("random campaign seed " + std::to_string(opts.seed) + " count " + std::to_string(opts.count));
  for (const auto& [k, v] : rows) {
    o.kv_line(k, std::to_string(v));
    o.text("  " + pad(k, 22) + std::to_string(v));
  }
  for (std::size_t i = 0; i < s.failures.size(); ++i) {
    o.kv_line("failure." + std::to_string(i), s.failures[i]);
    o.text("VIOLATION " + s.failures[i]);
  }
  return o.str();
}

}  // namespace setopt
