#include "cat3/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cat3/curvature.hpp"

namespace cat3 {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what, line);
}

bool parse_bool(const std::vector<std::string>& t, int line) {
  if (t.size() != 2 || (t[1] != "true" && t[1] != "false")) syntax(line, "expected `" + t[0] + " true|false`");
  return t[1] == "true";
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) syntax(line, "bad number `" + s + "`");
    return v;
  } catch (const std::logic_error&) {
    syntax(line, "bad number `" + s + "`");
  }
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto t = tokens(line);
    if (!t.empty()) f(t, number);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

ComplexDocument parse_complex(std::string_view text) {
  ComplexDocument doc;
  std::vector<std::string> names;
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::pair<Simplex, int>> simplices;
  bool seen_simplex = false;
  for_each_line(text, [&](const std::vector<std::string>& t, int line) {
    const std::string& key = t[0];
    if (key == "version") {
      if (t.size() != 2 || t[1] != "1") syntax(line, "unsupported version");
      if (seen_simplex) syntax(line, "version after simplex lines");
    } else if (key == "declared-cat0") {
      doc.declared_cat0 = parse_bool(t, line);
    } else if (key == "dim-unrestricted") {
      doc.dim_unrestricted = parse_bool(t, line);
    } else if (key == "simplex") {
      seen_simplex = true;
      if (t.size() < 2) syntax(line, "simplex needs at least one vertex");
      std::vector<VertexId> vs;
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto [it, fresh] = ids.try_emplace(t[i], static_cast<VertexId>(names.size()));
        if (fresh) names.push_back(t[i]);
        vs.push_back(it->second);
      }
      std::vector<VertexId> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) syntax(line, "repeated vertex in simplex");
      simplices.emplace_back(Simplex(std::move(vs)), line);
    } else {
      syntax(line, "unknown directive `" + key + "`");
    }
  });
  if (!doc.dim_unrestricted) {
    for (const auto& [s, line] : simplices) {
      if (s.size() > 5) {
        throw Error(Errc::TooHighDimension,
                    "line " + std::to_string(line) + ": simplex of dimension " + std::to_string(s.dimension()) +
                        " needs `dim-unrestricted true`",
                    line);
      }
    }
  }
  std::vector<Simplex> maximal;
  for (auto& [s, line] : simplices) maximal.push_back(s);
  const std::size_t count = names.size();
  doc.complex = SimplicialComplex::build_dense(count, maximal, std::move(names));
  return doc;
}

ComplexDocument load_complex(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::SyntaxError, "cannot read " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_complex(text.str());
}

std::string serialize_complex(const ComplexDocument& doc) {
  const SimplicialComplex& k = doc.complex;
  std::vector<std::string> lines;
  for (const Simplex& s : k.maximal_simplices()) {
    std::vector<std::string> names;
    for (VertexId v : s.vertices()) names.push_back(k.name(v));
    std::sort(names.begin(), names.end());
    std::string line = "simplex";
    for (const auto& n : names) line += " " + n;
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "version 1\n";
  out += doc.declared_cat0 ? "declared-cat0 true\n" : "declared-cat0 false\n";
  if (doc.dim_unrestricted) out += "dim-unrestricted true\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

ComplexDocument document_of(const Fixture& f) {
  ComplexDocument doc;
  doc.complex = f.complex;
  doc.declared_cat0 = f.declared_cat0;
  doc.dim_unrestricted = f.complex.dimension() > 4;
  return doc;
}

void check_declared_cat0(const ComplexDocument& doc) {
  if (!doc.declared_cat0) return;
  const CurvatureReport r = certify_cat0_necessary(doc.complex);
  if (!r.passes) throw Error(Errc::DeclaredCat0Contradiction, "declared CAT(0) but the curvature checks fail");
}

std::string serialize_disk(const SimplicialComplex& k, const DiskDiagram& d) {
  std::ostringstream out;
  out << "disk 1\nvertices " << d.vertex_count() << '\n';
  for (std::size_t i = 0; i < d.vertex_count(); ++i) out << "label " << i << ' ' << k.name(d.labels()[i]) << '\n';
  for (const auto& t : d.triangles()) out << "triangle " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out << "boundary";
  for (DiskVertex v : d.boundary()) out << ' ' << v;
  out << '\n';
  return out.str();
}

DiskDiagram parse_disk(const SimplicialComplex& k, std::string_view text) {
  std::optional<std::size_t> count;
  std::vector<std::optional<VertexId>> labels;
  std::vector<DiskTriangle> triangles;
  std::optional<std::vector<DiskVertex>> boundary;
  auto local = [&](const std::string& s, int line) {
    const int v = parse_int(s, line);
    if (!count || static_cast<std::size_t>(v) >= *count) syntax(line, "vertex " + s + " out of range");
    return v;
  };
  for_each_line(text, [&](const std::vector<std::string>& t, int line) {
    const std::string& key = t[0];
    if (key == "disk") {
      if (t.size() != 2 || t[1] != "1") syntax(line, "unsupported disk version");
    } else if (key == "vertices") {
      if (t.size() != 2 || count) syntax(line, "expected one `vertices N` line");
      count = static_cast<std::size_t>(parse_int(t[1], line));
      labels.assign(*count, std::nullopt);
    } else if (key == "label") {
      if (t.size() != 3) syntax(line, "expected `label i name`");
      labels[static_cast<std::size_t>(local(t[1], line))] = k.vertex(t[2]);
    } else if (key == "triangle") {
      if (t.size() != 4) syntax(line, "expected `triangle a b c`");
      triangles.push_back({local(t[1], line), local(t[2], line), local(t[3], line)});
    } else if (key == "boundary") {
      if (boundary) syntax(line, "repeated boundary line");
      boundary.emplace();
      for (std::size_t i = 1; i < t.size(); ++i) boundary->push_back(local(t[i], line));
    } else {
      syntax(line, "unknown directive `" + key + "`");
    }
  });
  if (!count || !boundary) throw Error(Errc::SyntaxError, "missing `vertices` or `boundary` line");
  std::vector<VertexId> resolved;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i]) throw Error(Errc::SyntaxError, "vertex " + std::to_string(i) + " has no label");
    resolved.push_back(*labels[i]);
  }
  DiskDiagram d(std::move(resolved), std::move(triangles), std::move(*boundary));
  validate_disk(d, &k);
  return d;
}

}  // namespace cat3
