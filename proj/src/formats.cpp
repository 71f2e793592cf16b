#include "cdgalab/formats.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"

namespace cdgalab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Line {
  int number = 0;
  std::string keyword;
  std::string rest;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) {
      auto sp = raw.find_first_of(" \t");
      Line l;
      l.number = number;
      l.keyword = std::string(raw.substr(0, sp));
      if (sp != std::string_view::npos) l.rest = std::string(trim(raw.substr(sp)));
      out.push_back(std::move(l));
    }
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
  }
  return v;
}

void check_name(const std::string& name, int line) {
  if (name.empty() || !is_identifier_start(name.front())) throw ParseError(line, "bad generator name '" + name + "'");
  for (char c : name) {
    if (!is_identifier_char(c)) throw ParseError(line, "bad generator name '" + name + "'");
  }
}

Generator parse_generator_decl(const Line& l) {
  auto w = words(l.rest);
  if (w.size() != 2) throw ParseError(l.number, "expected '" + l.keyword + " <name> <degree>'");
  check_name(w[0], l.number);
  const int degree = parse_int(w[1], l.number, "degree");
  if (degree < 1) throw ParseError(l.number, "generator '" + w[0] + "' needs degree >= 1");
  return {w[0], degree};
}

Assignment parse_assignment(const Line& l) {
  auto eq = l.rest.find('=');
  if (eq == std::string::npos) throw ParseError(l.number, "expected '" + l.keyword + " <name> = <expression>'");
  Assignment a;
  a.name = std::string(trim(std::string_view(l.rest).substr(0, eq)));
  a.expression = std::string(trim(std::string_view(l.rest).substr(eq + 1)));
  a.line = l.number;
  check_name(a.name, l.number);
  if (a.expression.empty()) throw ParseError(l.number, "empty expression for '" + a.name + "'");
  return a;
}

bool same_assignments(const std::vector<Assignment>& a, const std::vector<Assignment>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].expression != b[i].expression) return false;
  }
  return true;
}

Polynomial parse_line_expression(const Assignment& a, const AlgebraPtr& algebra) {
  try {
    return parse_polynomial(a.expression, algebra);
  } catch (const ParseError& e) {
    throw ParseError(a.line, e.what());
  } catch (const Error& e) {
    throw ParseError(a.line, e.what());
  }
}

std::filesystem::path relative_to(const std::filesystem::path& file, const std::string& target) {
  std::filesystem::path p(target);
  if (p.is_absolute()) return p;
  return file.parent_path() / p;
}

ParseError with_path(const std::filesystem::path& path, const std::exception& e) {
  return ParseError(0, path.string() + ": " + e.what());
}

}  // namespace

// ---------------------------------------------------------------------------

bool CdgaFile::operator==(const CdgaFile& o) const {
  return cap == o.cap && generators == o.generators && same_assignments(differential, o.differential);
}

CdgaFile parse_cdga_file(std::string_view text) {
  CdgaFile f;
  for (const Line& l : split_lines(text)) {
    if (l.keyword == "cap") {
      if (f.cap_line) throw ParseError(l.number, "cap given twice");
      f.cap = parse_int(l.rest, l.number, "cap");
      f.cap_line = l.number;
    } else if (l.keyword == "generator") {
      f.generators.push_back(parse_generator_decl(l));
      f.generator_lines.push_back(l.number);
    } else if (l.keyword == "d") {
      f.differential.push_back(parse_assignment(l));
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!f.cap_line) throw ParseError(0, "missing 'cap' line");
  return f;
}

CdgaPtr build_cdga(const CdgaFile& f) {
  std::map<std::string, int> declared;
  for (std::size_t i = 0; i < f.generators.size(); ++i) {
    const int line = i < f.generator_lines.size() ? f.generator_lines[i] : 0;
    if (!declared.emplace(f.generators[i].name, line).second) {
      throw ParseError(line, "generator '" + f.generators[i].name + "' declared twice");
    }
    if (f.generators[i].degree > f.cap) {
      throw ParseError(line, "generator '" + f.generators[i].name + "' has degree above the cap");
    }
  }
  if (f.cap < 1) throw ParseError(f.cap_line, "cap must be >= 1");
  auto algebra = std::make_shared<const GradedAlgebra>(f.generators, f.cap);
  std::map<std::string, Polynomial> d;
  std::map<std::string, int> d_line;
  for (const auto& a : f.differential) {
    auto idx = algebra->find(a.name);
    if (!idx) throw ParseError(a.line, "d of undeclared generator '" + a.name + "'");
    if (!d_line.emplace(a.name, a.line).second) throw ParseError(a.line, "d(" + a.name + ") given twice");
    Polynomial value = parse_line_expression(a, algebra);
    const int want = algebra->generator(*idx).degree + 1;
    if (!value.is_zero() && (!value.is_homogeneous() || *value.degree() != want)) {
      std::string got = value.is_homogeneous() ? std::to_string(*value.degree()) : "mixed";
      throw ParseError(a.line, "degree mismatch: d(" + a.name + ") = " + value.to_string() + " has degree " + got +
                                   ", expected " + std::to_string(want));
    }
    d.emplace(a.name, std::move(value));
  }
  try {
    return std::make_shared<const FreeCdga>(algebra, d);
  } catch (const DifferentialError& e) {
    auto it = d_line.find(e.generator());
    throw ParseError(it == d_line.end() ? 0 : it->second, e.what());
  }
}

CdgaPtr parse_cdga(std::string_view text) { return build_cdga(parse_cdga_file(text)); }

CdgaFile describe_cdga(const FreeCdga& a) {
  CdgaFile f;
  f.cap = a.cap();
  f.generators = a.algebra().generators();
  for (std::size_t i = 0; i < a.algebra().size(); ++i) {
    if (!a.d(i).is_zero()) f.differential.push_back({a.algebra().generator(i).name, a.d(i).to_string(), 0});
  }
  return f;
}

std::string serialize_cdga(const FreeCdga& a) {
  CdgaFile f = describe_cdga(a);
  std::ostringstream os;
  os << "cap " << f.cap << "\n";
  for (const auto& g : f.generators) os << "generator " << g.name << " " << g.degree << "\n";
  for (const auto& d : f.differential) os << "d " << d.name << " = " << d.expression << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

bool MorphismFile::operator==(const MorphismFile& o) const {
  return source == o.source && target == o.target && same_assignments(map, o.map);
}

MorphismFile parse_morphism_file(std::string_view text) {
  MorphismFile f;
  for (const Line& l : split_lines(text)) {
    if (l.keyword == "source" || l.keyword == "target") {
      auto& slot = l.keyword == "source" ? f.source : f.target;
      if (slot) throw ParseError(l.number, l.keyword + " given twice");
      if (l.rest.empty()) throw ParseError(l.number, "expected a path after '" + l.keyword + "'");
      slot = l.rest;
    } else if (l.keyword == "map") {
      f.map.push_back(parse_assignment(l));
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  return f;
}

CdgaMorphism build_morphism(const MorphismFile& f, const CdgaPtr& source, const CdgaPtr& target) {
  std::map<std::string, Polynomial> images;
  for (const auto& a : f.map) {
    if (!source->algebra().find(a.name)) throw ParseError(a.line, "map of unknown source generator '" + a.name + "'");
    if (images.count(a.name)) throw ParseError(a.line, "map of '" + a.name + "' given twice");
    images.emplace(a.name, parse_line_expression(a, target->algebra_ptr()));
  }
  try {
    return CdgaMorphism(source, target, images);
  } catch (const MorphismError& e) {
    int line = 0;
    for (const auto& a : f.map) {
      if (std::string(e.what()).find("'" + a.name + "'") != std::string::npos) line = a.line;
    }
    throw ParseError(line, e.what());
  }
}

std::string serialize_morphism(const MorphismFile& f) {
  std::ostringstream os;
  if (f.source) os << "source " << *f.source << "\n";
  if (f.target) os << "target " << *f.target << "\n";
  for (const auto& a : f.map) os << "map " << a.name << " = " << a.expression << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

bool ResolutionFile::operator==(const ResolutionFile& o) const {
  const auto& a = input;
  const auto& b = o.input;
  return target_path == o.target_path && a.cap == b.cap && a.top_level == b.top_level && a.basis == b.basis &&
         same_assignments(a.attach, b.attach) && same_assignments(a.null, b.null) &&
         same_assignments(a.augment, b.augment) && a.gamma == b.gamma;
}

ResolutionFile parse_resolution_file(std::string_view text) {
  ResolutionFile f;
  auto& in = f.input;
  int level = -1;
  bool have_cap = false;
  std::set<int> seen_levels;
  for (const Line& l : split_lines(text)) {
    if (l.keyword == "cap") {
      if (have_cap) throw ParseError(l.number, "cap given twice");
      in.cap = parse_int(l.rest, l.number, "cap");
      have_cap = true;
    } else if (l.keyword == "target") {
      if (f.target_path) throw ParseError(l.number, "target given twice");
      if (l.rest.empty()) throw ParseError(l.number, "expected a path after 'target'");
      f.target_path = l.rest;
    } else if (l.keyword == "gamma") {
      auto w = words(l.rest);
      if (w.size() != 2) throw ParseError(l.number, "expected 'gamma <degree> <dimension>'");
      in.gamma.emplace_back(parse_int(w[0], l.number, "degree"), parse_int(w[1], l.number, "dimension"));
    } else if (l.keyword == "level") {
      level = parse_int(l.rest, l.number, "level");
      if (level < 0 || level > 2) throw ParseError(l.number, "levels 0, 1 and 2 are supported");
      if (!seen_levels.insert(level).second) throw ParseError(l.number, "level " + l.rest + " given twice");
      in.top_level = std::max(in.top_level, level);
    } else if (l.keyword == "basis") {
      if (level < 0) throw ParseError(l.number, "basis before any 'level' line");
      in.basis[static_cast<std::size_t>(level)].push_back(parse_generator_decl(l));
    } else if (l.keyword == "attach") {
      if (level < 1) throw ParseError(l.number, "attach belongs to level 1 or 2");
      in.attach.push_back(parse_assignment(l));
    } else if (l.keyword == "null") {
      in.null.push_back(parse_assignment(l));
    } else if (l.keyword == "augment") {
      in.augment.push_back(parse_assignment(l));
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!have_cap) throw ParseError(0, "missing 'cap' line");
  if (seen_levels.empty()) throw ParseError(0, "missing 'level 0' section");
  return f;
}

std::string serialize_resolution(const ResolutionFile& f) {
  const auto& in = f.input;
  std::ostringstream os;
  os << "cap " << in.cap << "\n";
  if (f.target_path) os << "target " << *f.target_path << "\n";
  for (const auto& [deg, dim] : in.gamma) os << "gamma " << deg << " " << dim << "\n";
  for (int k = 0; k <= in.top_level; ++k) {
    os << "level " << k << "\n";
    for (const auto& g : in.basis[static_cast<std::size_t>(k)]) os << "basis " << g.name << " " << g.degree << "\n";
    for (const auto& a : in.attach) {
      bool here = false;
      for (const auto& g : in.basis[static_cast<std::size_t>(k)]) here = here || g.name == a.name;
      if (here) os << "attach " << a.name << " = " << a.expression << "\n";
    }
  }
  for (const auto& a : in.null) os << "null " << a.name << " = " << a.expression << "\n";
  for (const auto& a : in.augment) os << "augment " << a.name << " = " << a.expression << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CdgaPtr load_cdga(const std::filesystem::path& path) {
  std::string text = read_text(path);
  try {
    return parse_cdga(text);
  } catch (const Error& e) {
    throw with_path(path, e);
  }
}

LoadedMorphism load_morphism(const std::filesystem::path& path) {
  std::string text = read_text(path);
  MorphismFile f;
  try {
    f = parse_morphism_file(text);
  } catch (const Error& e) {
    throw with_path(path, e);
  }
  if (!f.source || !f.target) throw ParseError(0, path.string() + ": morphism files need 'source' and 'target' lines");
  CdgaPtr source = load_cdga(relative_to(path, *f.source));
  CdgaPtr target = load_cdga(relative_to(path, *f.target));
  try {
    CdgaMorphism m = build_morphism(f, source, target);
    auto defaulted = m.defaulted();
    return {std::move(m), std::move(defaulted)};
  } catch (const Error& e) {
    throw with_path(path, e);
  }
}

LoadedResolution load_resolution(const std::filesystem::path& path, const AssembleOptions& options) {
  std::string text = read_text(path);
  ResolutionFile f;
  try {
    f = parse_resolution_file(text);
  } catch (const Error& e) {
    throw with_path(path, e);
  }
  if (f.target_path) f.input.target = load_cdga(relative_to(path, *f.target_path));
  try {
    auto r = TruncatedRealization::assemble(f.input, options);
    return {std::move(f), std::move(r)};
  } catch (const ParseError& e) {
    throw with_path(path, e);
  }
}

}  // namespace cdgalab
