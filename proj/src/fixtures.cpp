#include "cat3/fixtures.hpp"

#include <charconv>
#include <map>

namespace cat3 {

namespace {

class Builder {
 public:
  VertexId id(const std::string& name) {
    auto [it, fresh] = ids_.try_emplace(name, static_cast<VertexId>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
  }
  void simplex(std::initializer_list<std::string> names) {
    std::vector<VertexId> vs;
    for (const auto& n : names) vs.push_back(id(n));
    maximal_.emplace_back(std::move(vs));
  }
  void simplex(const std::vector<std::string>& names) {
    std::vector<VertexId> vs;
    for (const auto& n : names) vs.push_back(id(n));
    maximal_.emplace_back(std::move(vs));
  }
  SimplicialComplex build() const { return SimplicialComplex::build_dense(names_.size(), maximal_, names_); }
  const std::map<std::string, VertexId>& ids() const { return ids_; }

 private:
  std::map<std::string, VertexId> ids_;
  std::vector<std::string> names_;
  std::vector<Simplex> maximal_;
};

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

int require_param(std::string_view name, const std::vector<int>& params, int minimum) {
  if (params.size() != 1) throw Error(Errc::BadParams, std::string(name) + " takes one integer parameter");
  if (params[0] < minimum) {
    throw Error(Errc::BadParams, std::string(name) + " needs a parameter >= " + std::to_string(minimum));
  }
  return params[0];
}

void require_none(std::string_view name, const std::vector<int>& params) {
  if (!params.empty()) throw Error(Errc::BadParams, std::string(name) + " takes no parameters");
}

// Automorphism from a name -> name mapping on the listed vertices.
Automorphism symmetry(const SimplicialComplex& k, const std::vector<std::pair<std::string, std::string>>& moves) {
  std::vector<VertexId> perm(k.vertex_count());
  for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
  for (const auto& [from, to] : moves) perm[k.vertex(from)] = k.vertex(to);
  return validate_automorphism(k, std::move(perm));
}

std::vector<std::pair<std::string, std::string>> cycle(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace_back(names[i], names[(i + 1) % names.size()]);
  return out;
}

void pentagon_join(Builder& b, int n) {
  std::vector<std::string> sigma;
  for (int j = 1; j <= n - 1; ++j) sigma.push_back(idx("x", j));
  for (int i = 0; i < 5; ++i) {
    std::vector<std::string> s = sigma;
    s.push_back(idx("v", i));
    s.push_back(idx("v", (i + 1) % 5));
    b.simplex(s);
  }
}

std::vector<std::string> ring(const char* prefix, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(idx(prefix, i));
  return out;
}

}  // namespace

Fixture generate_fixture(std::string_view name, const std::vector<int>& params) {
  Fixture f;
  f.name = std::string(name);
  if (!params.empty()) f.name += ":" + std::to_string(params[0]);
  Builder b;
  if (name == "pentagon_join" || name == "narwhal") {
    const int n = require_param(name, params, 3);
    pentagon_join(b, n);
    if (name == "narwhal") b.simplex({"v2", "v3", "u"});
    f.complex = b.build();
    if (name == "pentagon_join") f.symmetries.push_back(symmetry(f.complex, cycle(ring("v", 5))));
  } else if (name == "hex_disk") {
    require_none(name, params);
    for (int i = 0; i < 6; ++i) b.simplex({"o", idx("v", i), idx("v", (i + 1) % 6)});
    f.complex = b.build();
    f.declared_cat0 = true;
    f.symmetries.push_back(symmetry(f.complex, cycle(ring("v", 6))));
    f.symmetries.push_back(symmetry(f.complex, {{"v1", "v5"}, {"v5", "v1"}, {"v2", "v4"}, {"v4", "v2"}}));
  } else if (name == "stacked_tets") {
    const int k = require_param(name, params, 1);
    for (int i = 0; i < k; ++i) b.simplex({idx("p", i), idx("p", i + 1), idx("p", i + 2), idx("p", i + 3)});
    f.complex = b.build();
    f.declared_cat0 = true;
    std::vector<std::pair<std::string, std::string>> flip;
    for (int i = 0; i <= k + 2; ++i) flip.emplace_back(idx("p", i), idx("p", k + 2 - i));
    f.symmetries.push_back(symmetry(f.complex, flip));
  } else if (name == "octahedron") {
    require_none(name, params);
    for (const char* x : {"px", "nx"})
      for (const char* y : {"py", "ny"})
        for (const char* z : {"pz", "nz"}) b.simplex({x, y, z});
    f.complex = b.build();
    f.symmetries.push_back(symmetry(f.complex, {{"px", "py"}, {"py", "pz"}, {"pz", "px"}, {"nx", "ny"}, {"ny", "nz"}, {"nz", "nx"}}));
    f.symmetries.push_back(symmetry(f.complex, cycle({"px", "py", "nx", "ny"})));
    f.symmetries.push_back(symmetry(f.complex, {{"px", "nx"}, {"nx", "px"}}));
  } else if (name == "strip") {
    const int k = require_param(name, params, 1);
    for (int i = 0; i < k; ++i) b.simplex({idx("p", i), idx("p", i + 1), idx("p", i + 2)});
    f.complex = b.build();
    f.declared_cat0 = true;
  } else if (name == "tet_wheel") {
    const int k = require_param(name, params, 3);
    for (int i = 0; i < k; ++i) b.simplex({"a", "b", idx("c", i), idx("c", (i + 1) % k)});
    f.complex = b.build();
    f.declared_cat0 = k >= 6;
    f.symmetries.push_back(symmetry(f.complex, cycle(ring("c", k))));
    f.symmetries.push_back(symmetry(f.complex, {{"a", "b"}, {"b", "a"}}));
  } else if (name == "resolve") {
    require_none(name, params);
    for (int i = 1; i <= 3; ++i) {
      b.simplex({idx("a", i), idx("a", i + 1), idx("b", i + 1)});
      b.simplex({idx("b", i), idx("b", i + 1), idx("a", i)});
      b.simplex({idx("b", i), idx("b", i + 1), idx("c", i + 1)});
      b.simplex({idx("c", i), idx("c", i + 1), idx("b", i)});
    }
    b.simplex({"c1", "c2", "d2"});
    b.simplex({"d1", "d2", "c1"});
    f.complex = b.build();
    f.declared_cat0 = true;
  } else {
    throw Error(Errc::BadParams, "unknown fixture '" + std::string(name) + "'");
  }
  return f;
}

Fixture generate_fixture(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    const std::string_view rest = spec.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(Errc::BadParams, "bad fixture parameter '" + std::string(rest) + "'");
    }
    params.push_back(value);
  }
  return generate_fixture(name, params);
}

std::vector<std::string> fixture_names() {
  return {"pentagon_join", "narwhal", "hex_disk", "stacked_tets", "octahedron", "strip", "tet_wheel", "resolve"};
}

std::vector<std::string> bundled_fixtures() {
  return {"hex_disk",    "octahedron",  "strip:3",     "stacked_tets:1", "stacked_tets:2", "stacked_tets:3",
          "tet_wheel:3", "tet_wheel:6", "resolve",     "pentagon_join:3", "pentagon_join:4", "narwhal:3"};
}

}  // namespace cat3
