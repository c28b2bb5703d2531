#include "oddjacobi/structure_file.hpp"

#include <fstream>
#include <sstream>

#include "oddjacobi/text.hpp"

namespace oddjacobi {

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::schouten: return "schouten";
    case StructureKind::qs: return "qs";
    case StructureKind::odd_jacobi: return "odd-jacobi";
    case StructureKind::exact_qs: return "exact-qs";
    case StructureKind::none: break;
  }
  return "none";
}

namespace {

bool is_reserved(const std::string& name) {
  return name == "p" || name == "d" || name == "exp";
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Loader {
  std::optional<PhaseSpace> space;
  StructureKind kind = StructureKind::none;
  std::optional<SuperPoly> generator;
  std::string generator_key;
  std::optional<VectorField> q;
  std::optional<VectorField> homothety;
  bool fields_started = false;

  void manifold_line(const std::string& body, int line) {
    if (space) throw ParseError("duplicate manifold declaration", line, 1);
    SuperManifold m;
    std::istringstream words(body);
    std::string word;
    while (words >> word) {
      const size_t colon = word.find(':');
      if (colon == std::string::npos)
        throw ParseError("coordinates are declared as name:parity", line, 1);
      const std::string name = word.substr(0, colon);
      const std::string parity = word.substr(colon + 1);
      if (name.empty())
        throw ParseError("empty coordinate name", line, 1);
      if (is_reserved(name))
        throw ParseError("'" + name + "' is reserved and cannot name a coordinate",
                         line, 1);
      if (parity != "even" && parity != "odd")
        throw ParseError("parity must be 'even' or 'odd'", line, 1);
      m.coordinates.emplace_back(name, parity == "odd" ? Parity::odd : Parity::even);
    }
    if (m.coordinates.empty())
      throw ParseError("manifold declares no coordinates", line, 1);
    try {
      space = PhaseSpace::over(std::move(m));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, 1);
    }
  }

  void line_line(const std::string& body, int line) {
    require_space(line);
    if (fields_started)
      throw ParseError("the line declaration must precede structure fields", line, 1);
    const std::string name = strip(body);
    if (name.empty()) throw ParseError("line declaration needs a coordinate name", line, 1);
    if (is_reserved(name))
      throw ParseError("'" + name + "' is reserved and cannot name a coordinate",
                       line, 1);
    try {
      space = space->extended_with_line(name);
    } catch (const Error& e) {
      throw ParseError(e.what(), line, 1);
    }
  }

  void structure_line(const std::string& body, int line) {
    if (kind != StructureKind::none)
      throw ParseError("duplicate structure declaration", line, 1);
    const std::string word = strip(body);
    if (word == "schouten") kind = StructureKind::schouten;
    else if (word == "qs") kind = StructureKind::qs;
    else if (word == "odd-jacobi") kind = StructureKind::odd_jacobi;
    else if (word == "exact-qs") kind = StructureKind::exact_qs;
    else
      throw ParseError("unknown structure kind '" + word + "'", line, 1);
  }

  void field_line(const std::string& key, const std::string& value, int line,
                  int value_column) {
    require_space(line);
    fields_started = true;
    if (key == "S_hat" || key == "S") {
      if (generator)
        throw ParseError("a structure has a single generator field (S or S_hat)",
                         line, 1);
      generator = parse_expression(value, *space, line, value_column);
      generator_key = key;
    } else if (key == "Q") {
      if (q) throw ParseError("duplicate Q field", line, 1);
      q = parse_vector_field(value, *space, line, value_column);
    } else if (key == "E") {
      if (homothety) throw ParseError("duplicate E field", line, 1);
      homothety = parse_vector_field(value, *space, line, value_column);
    } else {
      throw ParseError("unknown field '" + key + "'", line, 1);
    }
  }

  void require_space(int line) const {
    if (!space)
      throw ParseError("the manifold must be declared first", line, 1);
  }

  StructureFile finish(int last_line) {
    if (!space) throw ParseError("no manifold declaration", last_line, 1);
    const char* want_generator = nullptr;
    bool want_q = false, want_e = false;
    switch (kind) {
      case StructureKind::none:
        if (generator || q || homothety)
          throw ParseError("structure fields need a structure declaration",
                           last_line, 1);
        break;
      case StructureKind::schouten: want_generator = "S_hat"; break;
      case StructureKind::qs: want_generator = "S_hat"; want_q = true; break;
      case StructureKind::odd_jacobi: want_generator = "S"; want_q = true; break;
      case StructureKind::exact_qs:
        want_generator = "S_hat";
        want_q = true;
        want_e = true;
        break;
    }
    if (want_generator) {
      if (!generator)
        throw ParseError(std::string("missing ") + want_generator + " field",
                         last_line, 1);
      if (generator_key != want_generator)
        throw ParseError("a " + std::string(to_string(kind)) +
                             " structure names its generator " + want_generator,
                         last_line, 1);
    }
    if (want_q && !q) throw ParseError("missing Q field", last_line, 1);
    if (!want_q && q) throw ParseError("unexpected Q field", last_line, 1);
    if (want_e && !homothety) throw ParseError("missing E field", last_line, 1);
    if (!want_e && homothety) throw ParseError("unexpected E field", last_line, 1);
    return StructureFile{std::move(*space), kind, std::move(generator), std::move(q),
                         std::move(homothety)};
  }
};

}  // namespace

StructureFile parse_structure_text(const std::string& text) {
  Loader loader;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string content = strip(raw);
    if (content.empty()) continue;
    const size_t eq = raw.find('=');
    if (eq != std::string::npos) {
      const std::string key = strip(raw.substr(0, eq));
      loader.field_line(key, raw.substr(eq + 1), line, static_cast<int>(eq) + 1);
      continue;
    }
    std::istringstream words(content);
    std::string head;
    words >> head;
    std::string body;
    std::getline(words, body);
    if (head == "manifold") loader.manifold_line(body, line);
    else if (head == "line") loader.line_line(body, line);
    else if (head == "structure") loader.structure_line(body, line);
    else throw ParseError("unknown directive '" + head + "'", line, 1);
  }
  return loader.finish(line == 0 ? 1 : line);
}

StructureFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_structure_text(buffer.str());
}

namespace {

VectorField q_or_zero(const StructureFile& file) {
  if (file.q) return *file.q;
  return VectorField::zero(file.space, Parity::odd);
}

void require_kind(const StructureFile& file, StructureKind want) {
  if (file.kind != want)
    throw Error(std::string("file declares a ") + to_string(file.kind) +
                " structure, not " + to_string(want));
}

}  // namespace

SchoutenStructure as_schouten(const StructureFile& file) {
  require_kind(file, StructureKind::schouten);
  return SchoutenStructure(file.space, *file.generator);
}

QSStructure as_qs(const StructureFile& file) {
  if (file.kind != StructureKind::qs) require_kind(file, StructureKind::schouten);
  return QSStructure(SchoutenStructure(file.space, *file.generator),
                     HomologicalField(file.space, q_or_zero(file)));
}

OddJacobiStructure as_odd_jacobi(const StructureFile& file) {
  if (file.kind != StructureKind::odd_jacobi)
    require_kind(file, StructureKind::schouten);
  return OddJacobiStructure(file.space, *file.generator,
                            HomologicalField(file.space, q_or_zero(file)));
}

ExactQSStructure as_exact_qs(const StructureFile& file) {
  require_kind(file, StructureKind::exact_qs);
  return ExactQSStructure(QSStructure(SchoutenStructure(file.space, *file.generator),
                                      HomologicalField(file.space, *file.q)),
                          *file.homothety);
}

namespace {

std::string manifold_text(const PhaseSpace& space) {
  std::string out = "manifold";
  for (const auto& [name, parity] : space.manifold().coordinates)
    out += " " + name + ":" + to_string(parity);
  out += "\n";
  if (space.has_line()) {
    const AlgebraPtr& alg = space.algebra();
    out += "line " + alg->var(alg->line_base_index()).name + "\n";
  }
  return out;
}

}  // namespace

std::string format_structure(const SchoutenStructure& st) {
  std::string out = manifold_text(st.space());
  out += "structure schouten\n";
  out += "S_hat = " + print_expression(st.s_hat()) + "\n";
  return out;
}

std::string format_structure(const OddJacobiStructure& st) {
  std::string out = manifold_text(st.space());
  out += "structure odd-jacobi\n";
  out += "S = " + print_expression(st.s()) + "\n";
  out += "Q = " + print_vector_field(st.homological().field()) + "\n";
  return out;
}

}  // namespace oddjacobi
