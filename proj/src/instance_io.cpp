#include "setopt/instance_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace setopt {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}
  InstanceFile parse();

 private:
  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) const {
    const int col = tok < l.tokens.size() ? l.tokens[tok].column
                                          : (l.tokens.empty() ? 1
                                                              : l.tokens.back().column +
                                                                    static_cast<int>(l.tokens.back().text.size()));
    throw ParseError(l.number, col, msg);
  }
  Rational number(const Line& l, std::size_t tok) const {
    Rational r;
    if (!try_parse_rational(l.tokens[tok].text, r)) fail(l, tok, "expected an exact rational, got '" + l.tokens[tok].text + "'");
    return r;
  }
  Vec numbers(const Line& l, std::size_t from, std::size_t count) const {
    if (l.tokens.size() != from + count)
      fail(l, std::min(l.tokens.size(), from + count),
           "expected " + std::to_string(count) + " numbers after '" + l.tokens[0].text + "'");
    Vec v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(number(l, from + i));
    return v;
  }
  std::size_t need(const Line& l, const std::optional<std::size_t>& d, const char* what) const {
    if (!d) fail(l, 0, std::string("'") + what + "' must be declared first");
    return *d;
  }
  std::size_t positive_int(const Line& l, std::size_t tok) const {
    const Rational r = number(l, tok);
    if (r.get_den() != 1 || r <= 0 || r > 64) fail(l, tok, "expected a positive integer");
    return r.get_num().get_ui();
  }

  std::vector<Line> lines_;
};

InstanceFile Parser::parse() {
  if (lines_.empty()) throw ParseError(1, 1, "empty instance");
  const Line& first = lines_.front();
  if (first.tokens[0].text != "instance") fail(first, 0, "expected 'instance NAME'");
  if (first.tokens.size() != 2) fail(first, std::min<std::size_t>(first.tokens.size(), 2), "expected 'instance NAME'");

  std::string name = first.tokens[1].text;
  std::optional<std::size_t> m, n;
  std::vector<Vec> rays;
  bool orthant = false;
  std::optional<Vec> interior;
  std::vector<HalfSpace> domain;
  struct RowSpec {
    Vec normal;
    std::vector<AffinePiece> pieces;
    const Line* line;
  };
  std::vector<RowSpec> rows;
  std::vector<std::pair<std::vector<AffinePiece>, const Line*>> components;
  std::vector<Vec> candidates, tests;
  WitnessSearch search;
  bool witness_set = false;
  std::vector<ExpectedVerdict> expected;
  std::vector<std::string> notes;
  bool ended = false;

  for (std::size_t li = 1; li < lines_.size(); ++li) {
    const Line& l = lines_[li];
    const std::string& key = l.tokens[0].text;
    if (ended) fail(l, 0, "content after 'end'");
    if (key == "end") {
      if (l.tokens.size() != 1) fail(l, 1, "'end' takes no arguments");
      ended = true;
    } else if (key == "space" || key == "xdim") {
      auto& slot = key == "space" ? m : n;
      if (slot) fail(l, 0, "'" + key + "' given twice");
      if (l.tokens.size() != 2) fail(l, std::min<std::size_t>(l.tokens.size(), 2), "expected one integer");
      slot = positive_int(l, 1);
    } else if (key == "cone") {
      const std::size_t dm = need(l, m, "space");
      if (l.tokens.size() < 2) fail(l, 1, "expected 'orthant' or 'ray'");
      if (l.tokens[1].text == "orthant") {
        if (l.tokens.size() != 2) fail(l, 2, "'cone orthant' takes no arguments");
        if (orthant || !rays.empty()) fail(l, 0, "cone already given");
        orthant = true;
      } else if (l.tokens[1].text == "ray") {
        if (orthant) fail(l, 0, "cone already given");
        rays.push_back(numbers(l, 2, dm));
      } else {
        fail(l, 1, "expected 'orthant' or 'ray'");
      }
    } else if (key == "interior") {
      if (interior) fail(l, 0, "'interior' given twice");
      interior = numbers(l, 1, need(l, m, "space"));
    } else if (key == "domain") {
      const std::size_t dn = need(l, n, "xdim");
      if (l.tokens.size() != dn + 3 || l.tokens[dn + 1].text != "<=")
        fail(l, std::min(l.tokens.size(), dn + 1), "expected 'domain g1 .. gN <= h'");
      Vec g;
      for (std::size_t i = 0; i < dn; ++i) g.push_back(number(l, 1 + i));
      domain.push_back(HalfSpace{g, number(l, dn + 2)});
    } else if (key == "normal") {
      if (!components.empty()) fail(l, 0, "cannot mix 'normal' rows with vector components");
      rows.push_back(RowSpec{numbers(l, 1, need(l, m, "space")), {}, &l});
    } else if (key == "piece") {
      if (rows.empty()) fail(l, 0, "'piece' before any 'normal'");
      const Vec v = numbers(l, 1, need(l, n, "xdim") + 1);
      rows.back().pieces.push_back(AffinePiece{Vec(v.begin(), v.end() - 1), v.back()});
    } else if (key == "component") {
      if (!rows.empty()) fail(l, 0, "cannot mix vector components with 'normal' rows");
      if (l.tokens.size() != 1) fail(l, 1, "'component' takes no arguments");
      components.push_back({{}, &l});
    } else if (key == "affine") {
      if (components.empty()) fail(l, 0, "'affine' before any 'component'");
      const Vec v = numbers(l, 1, need(l, n, "xdim") + 1);
      components.back().first.push_back(AffinePiece{Vec(v.begin(), v.end() - 1), v.back()});
    } else if (key == "candidate" || key == "test") {
      (key == "candidate" ? candidates : tests).push_back(numbers(l, 1, need(l, n, "xdim")));
    } else if (key == "grid") {
      const std::size_t dn = need(l, n, "xdim");
      const Vec v = numbers(l, 1, 2 * dn + 1);
      const Rational& k = v.back();
      if (k.get_den() != 1 || k <= 0 || k > 64) fail(l, 2 * dn + 1, "grid steps must be a positive integer");
      const TestSet g = TestSet::grid(Vec(v.begin(), v.begin() + static_cast<long>(dn)),
                                      Vec(v.begin() + static_cast<long>(dn), v.end() - 1),
                                      static_cast<int>(k.get_num().get_si()));
      tests.insert(tests.end(), g.points.begin(), g.points.end());
    } else if (key == "witness") {
      if (witness_set) fail(l, 0, "'witness' given twice");
      witness_set = true;
      const std::string s = l.tokens.size() > 1 ? l.tokens[1].text : "";
      if (s == "regions" && l.tokens.size() == 2) {
        search.strategy = WitnessSearch::Strategy::Regions;
      } else if (s == "vertices" && l.tokens.size() == 2) {
        search.strategy = WitnessSearch::Strategy::Vertices;
      } else if (s == "mstar" && l.tokens.size() == 2) {
        search.strategy = WitnessSearch::Strategy::MStar;
      } else if (s == "grid" && l.tokens.size() == 3) {
        search.strategy = WitnessSearch::Strategy::Grid;
        search.grid = static_cast<int>(positive_int(l, 2));
      } else {
        fail(l, 1, "expected 'regions', 'vertices', 'mstar' or 'grid K'");
      }
    } else if (key == "mstar") {
      search.mstar.push_back(numbers(l, 1, need(l, m, "space")));
    } else if (key == "expect") {
      if (l.tokens.size() != 3) fail(l, std::min<std::size_t>(l.tokens.size(), 3), "expected 'expect CONDITION holds|fails'");
      const auto c = parse_condition(l.tokens[1].text);
      if (!c) fail(l, 1, "unknown condition '" + l.tokens[1].text + "'");
      const std::string& h = l.tokens[2].text;
      if (h != "holds" && h != "fails") fail(l, 2, "expected 'holds' or 'fails'");
      expected.push_back(ExpectedVerdict{*c, h == "holds", "file"});
    } else if (key == "note") {
      std::string text;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) text += (i > 1 ? " " : "") + l.tokens[i].text;
      notes.push_back(text);
    } else {
      fail(l, 0, "unknown keyword '" + key + "'");
    }
  }
  const Line& last = lines_.back();
  if (!ended) fail(last, last.tokens.size(), "missing 'end'");
  if (!m) fail(last, 0, "missing 'space'");
  if (!n) fail(last, 0, "missing 'xdim'");
  if (!orthant && rays.empty()) fail(last, 0, "missing 'cone'");
  if (rows.empty() && components.empty()) fail(last, 0, "the map has no rows or components");
  for (const auto& r : rows)
    if (r.pieces.empty()) fail(*r.line, 0, "row without 'piece' lines");
  for (const auto& c : components)
    if (c.first.empty()) fail(*c.second, 0, "component without 'affine' lines");
  if (!components.empty() && components.size() != *m)
    fail(*components.back().second, 0, "expected " + std::to_string(*m) + " components");
  if (search.strategy == WitnessSearch::Strategy::MStar && search.mstar.empty())
    fail(last, 0, "'witness mstar' needs at least one 'mstar' line");

  const Vec e = interior ? *interior : Vec(*m, Rational(1));
  ConePtr cone = orthant ? OrderingCone::orthant(*m, e) : OrderingCone::from_generators(rays, e);
  XDomain dom{*n, domain};

  std::shared_ptr<const HFamilyMap> map;
  if (!components.empty()) {
    auto psi = std::make_shared<VectorMap>();
    psi->cone = cone;
    psi->domain = dom;
    for (auto& c : components) psi->components.push_back(ConvexComponent{c.first});
    map = std::make_shared<HFamilyMap>(epigraphical_extension(name, psi));
  } else {
    std::vector<MapRow> mrows;
    for (auto& r : rows) mrows.push_back(MapRow{r.normal, ConcavePWL(r.pieces)});
    map = std::make_shared<HFamilyMap>(name, cone, dom, std::move(mrows));
  }

  InstanceFile out;
  out.candidates = candidates;
  Instance& inst = out.instance;
  inst.name = name;
  inst.map = map;
  if (!candidates.empty()) inst.x0 = candidates.front();
  inst.testset = TestSet::of(tests.empty() ? candidates : tests);
  inst.search = search;
  inst.expected = std::move(expected);
  inst.notes = std::move(notes);
  return out;
}

void put(std::ostringstream& os, const Vec& v) {
  for (const auto& r : v) os << ' ' << to_string(r);
}

}  // namespace

InstanceFile parse_instance(std::string_view text) { return Parser(text).parse(); }

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string export_instance(const Instance& inst, const std::vector<Vec>& candidates) {
  const HFamilyMap& f = *inst.map;
  const OrderingCone& c = *f.cone();
  std::ostringstream os;
  os << "instance " << inst.name << '\n';
  os << "space " << c.dimension() << '\n';
  if (c.is_orthant()) {
    os << "cone orthant\n";
  } else {
    for (const auto& g : c.generators()) {
      os << "cone ray";
      put(os, g);
      os << '\n';
    }
  }
  os << "interior";
  put(os, c.interior_point());
  os << "\nxdim " << f.xdim() << '\n';
  const auto& psi = f.vector_source();
  for (const auto& h : (psi ? psi->domain : f.domain()).rows) {
    os << "domain";
    put(os, h.normal);
    os << " <= " << to_string(h.offset) << '\n';
  }
  if (psi) {
    for (const auto& comp : psi->components) {
      os << "component\n";
      for (const auto& p : comp.pieces) {
        os << "affine";
        put(os, p.g);
        os << ' ' << to_string(p.h) << '\n';
      }
    }
  } else {
    for (const auto& r : f.rows()) {
      os << "normal";
      put(os, r.normal);
      os << '\n';
      for (const auto& p : r.offset.pieces()) {
        os << "piece";
        put(os, p.g);
        os << ' ' << to_string(p.h) << '\n';
      }
    }
  }
  std::vector<Vec> cands = candidates;
  if (cands.empty() && !inst.x0.empty()) cands.push_back(inst.x0);
  for (const auto& x : cands) {
    os << "candidate";
    put(os, x);
    os << '\n';
  }
  for (const auto& x : inst.testset.points) {
    os << "test";
    put(os, x);
    os << '\n';
  }
  switch (inst.search.strategy) {
    case WitnessSearch::Strategy::Regions: os << "witness regions\n"; break;
    case WitnessSearch::Strategy::Vertices: os << "witness vertices\n"; break;
    case WitnessSearch::Strategy::Grid: os << "witness grid " << inst.search.grid << '\n'; break;
    case WitnessSearch::Strategy::MStar: os << "witness mstar\n"; break;
  }
  for (const auto& z : inst.search.mstar) {
    os << "mstar";
    put(os, z);
    os << '\n';
  }
  for (const auto& ex : inst.expected)
    os << "expect " << condition_name(ex.condition) << (ex.holds ? " holds" : " fails") << '\n';
  for (const auto& note : inst.notes) {
    std::string flat = note.substr(0, note.find('\n'));
    for (auto& ch : flat)
      if (ch == '#') ch = ' ';
    os << "note " << flat << '\n';
  }
  os << "end\n";
  return os.str();
}

}  // namespace setopt
