#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "setopt/harness.hpp"
#include "setopt/instance_io.hpp"
#include "setopt/report.hpp"

using namespace setopt;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Vec parse_point(const std::string& text, std::size_t dim, const std::string& what) {
  Vec v;
  for (const auto& part : split(text, ',')) {
    Rational r;
    if (!try_parse_rational(trim(part), r)) throw UsageError(what + ": not an exact rational: '" + trim(part) + "'");
    v.push_back(r);
  }
  if (v.size() != dim)
    throw UsageError(what + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

InstanceFile resolve(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    InstanceFile f;
    f.instance = builtin(spec.substr(prefix.size()));
    f.candidates = {f.instance.x0};
    return f;
  }
  return load_instance_file(spec);
}

WitnessSearch parse_search(const std::string& text, std::size_t m) {
  WitnessSearch w;
  if (text == "regions") return w;
  if (text == "vertices") {
    w.strategy = WitnessSearch::Strategy::Vertices;
    return w;
  }
  if (text.rfind("grid:", 0) == 0) {
    w.strategy = WitnessSearch::Strategy::Grid;
    Rational k;
    if (!try_parse_rational(text.substr(5), k) || k.get_den() != 1 || k < 1 || k > 64)
      throw UsageError("--witness-search grid:K needs a positive integer K");
    w.grid = static_cast<int>(k.get_num().get_si());
    return w;
  }
  if (text.rfind("mstar:", 0) == 0) {
    w.strategy = WitnessSearch::Strategy::MStar;
    const std::string path = text.substr(6);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read M* file '" + path + "'");
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) continue;
      for (auto& c : line)
        if (c == ' ' || c == '\t') c = ',';
      std::string joined;
      for (const auto& part : split(line, ','))
        if (!part.empty()) joined += (joined.empty() ? "" : ",") + part;
      w.mstar.push_back(parse_point(joined, m, path + ":" + std::to_string(number)));
    }
    if (w.mstar.empty()) throw UsageError("M* file '" + path + "' lists no functionals");
    return w;
  }
  throw UsageError("--witness-search must be vertices, regions, grid:K or mstar:FILE");
}

struct Common {
  std::string instance;
  std::string point;
  std::string testset;
  std::string search;
  std::string format = "human";
};

ReportFormat format_of(const Common& c) { return c.format == "kv" ? ReportFormat::Kv : ReportFormat::Human; }

Instance prepare(const Common& c) {
  InstanceFile file = resolve(c.instance);
  Instance inst = file.instance;
  const std::size_t n = inst.map->xdim();
  if (!c.point.empty()) {
    const Vec x0 = parse_point(c.point, n, "--point");
    if (x0 != inst.x0) inst.expected.clear();
    inst.x0 = x0;
  }
  if (inst.x0.empty()) throw UsageError("no candidate point: give --point or a 'candidate' line");
  if (!c.testset.empty()) {
    std::vector<Vec> pts;
    for (const auto& p : split(c.testset, ';'))
      if (!trim(p).empty()) pts.push_back(parse_point(p, n, "--testset"));
    if (pts.empty()) throw UsageError("--testset lists no points");
    inst.testset = TestSet::of(pts);
    inst.expected.clear();
  }
  if (inst.testset.points.empty()) inst.testset = TestSet::of({inst.x0});
  if (!c.search.empty()) inst.search = parse_search(c.search, inst.map->zdim());
  return inst;
}

void add_common(CLI::App* cmd, Common& c, bool with_point = true) {
  cmd->add_option("instance", c.instance, "instance file or builtin:NAME")->required();
  if (with_point) cmd->add_option("--point", c.point, "candidate point x0, e.g. 2/3 or 0,2");
  cmd->add_option("--testset", c.testset, "test points 'a,b;c,d'");
  cmd->add_option("--witness-search", c.search, "vertices | regions | grid:K | mstar:FILE");
  cmd->add_option("--format", c.format, "human | kv")->check(CLI::IsMember({"human", "kv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify minimality and variational-inequality conditions for set-valued maps"};
  app.require_subcommand(1);

  Common cert;
  std::string conditions;
  auto* c_cert = app.add_subcommand("certify", "decide conditions at a candidate point over a test set");
  add_common(c_cert, cert);
  c_cert->add_option("--conditions", conditions, "comma-separated condition names (default: all)");

  Common impl;
  bool strict = false;
  std::uint64_t seed = 7;
  int count = 1000;
  auto* c_impl = app.add_subcommand("implications", "check the implication diagram; 'random' runs a seeded campaign");
  add_common(c_impl, impl);
  c_impl->add_flag("--strict-edges", strict, "exit 1 on any violated edge");
  c_impl->add_option("--seed", seed, "campaign seed");
  c_impl->add_option("--count", count, "campaign size")->check(CLI::Range(1, 1000000));

  Common der;
  std::string direction;
  auto* c_der = app.add_subcommand("derive", "print f'(x,u), the phi' table and SR/WR verdicts");
  add_common(c_der, der);
  c_der->add_option("--direction", direction, "direction u")->required();

  std::string export_name;
  auto* c_exp = app.add_subcommand("export", "print an instance in file form");
  c_exp->add_option("instance", export_name, "instance file or builtin:NAME")->required();

  app.add_subcommand("list", "list built-in instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand("list")) {
      for (const auto& n : builtin_names()) std::cout << "builtin:" << n << '\n';
      return 0;
    }
    if (c_exp->parsed()) {
      const InstanceFile f = resolve(export_name);
      std::cout << export_instance(f.instance, f.candidates);
      return 0;
    }
    if (c_cert->parsed()) {
      const Instance inst = prepare(cert);
      std::vector<Condition> wanted(kTwelveConditions.begin(), kTwelveConditions.end());
      if (!conditions.empty() && conditions != "all") {
        wanted.clear();
        for (const auto& name : split(conditions, ',')) {
          const auto c = parse_condition(trim(name));
          if (!c) throw UsageError("--conditions: unknown condition '" + trim(name) + "'");
          wanted.push_back(*c);
        }
      }
      CertificationContext ctx(inst.map, inst.x0, inst.search);
      std::vector<ConditionVerdict> verdicts;
      for (Condition c : wanted) verdicts.push_back(ctx.certify(c, inst.testset));
      std::cout << render_certify(inst, verdicts, format_of(cert));
      return 0;
    }
    if (c_impl->parsed()) {
      if (impl.instance == "random") {
        CampaignOptions opts;
        opts.seed = seed;
        opts.count = count;
        const CampaignSummary s = run_random_campaign(opts);
        std::cout << render_campaign(opts, s, format_of(impl));
        return strict && s.violations > 0 ? kExitViolation : 0;
      }
      const Instance inst = prepare(impl);
      const HarnessReport rep = run_implication_harness(inst);
      std::cout << render_harness(inst, rep, format_of(impl));
      return strict && rep.count(EdgeStatus::Violation) > 0 ? kExitViolation : 0;
    }
    if (c_der->parsed()) {
      Instance inst = prepare(der);
      const Vec u = parse_point(direction, inst.map->xdim(), "--direction");
      std::cout << render_derive(inst, inst.x0, u, format_of(der));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const StructuralError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
