#include "cat3/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "cat3/automata.hpp"
#include "cat3/curvature.hpp"
#include "cat3/disks.hpp"
#include "cat3/fixtures.hpp"
#include "cat3/gs_geodesics.hpp"
#include "cat3/io.hpp"
#include "cat3/moves.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

namespace {

struct Input {
  std::string complex_file;
  std::string fixture;
};

struct Loaded {
  ComplexDocument doc;
  std::vector<Automorphism> symmetries;
  const SimplicialComplex& k() const { return doc.complex; }
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input(CLI::App* sub, Input& in) {
  auto* c = sub->add_option("--complex", in.complex_file, "complex file (.cplx)");
  auto* f = sub->add_option("--fixture", in.fixture, "generated fixture NAME[:params]");
  c->excludes(f);
}

Loaded load(const Input& in) {
  Loaded l;
  if (!in.fixture.empty()) {
    Fixture f = generate_fixture(in.fixture);
    l.doc = document_of(f);
    l.symmetries = std::move(f.symmetries);
  } else if (!in.complex_file.empty()) {
    l.doc = load_complex(in.complex_file);
  } else {
    throw Usage("one of --complex or --fixture is required");
  }
  check_declared_cat0(l.doc);
  return l;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Path to_path(const SimplicialComplex& k, const std::vector<std::string>& names) {
  Path p;
  for (const auto& n : names) p.push_back(k.vertex(n));
  return p;
}

std::string show(const SimplicialComplex& k, const std::vector<VertexId>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + k.name(p[i]);
  return s;
}

const char* yes(bool b) { return b ? "true" : "false"; }

int code_for(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::UnknownVertex:
    case Errc::InvalidStep:
    case Errc::BadParams:
    case Errc::TooHighDimension:
    case Errc::DisconnectedComplex:
    case Errc::DuplicateVertexInSimplex:
    case Errc::EmptySimplex:
    case Errc::EmptyComplex:
    case Errc::NotClosed:
    case Errc::EndpointMismatch:
    case Errc::TargetNotGeodesic:
    case Errc::NotGeodesic:
    case Errc::NotADisk:
    case Errc::LabelNotAFace:
    case Errc::UnsupportedN:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial geodesics and disk diagrams in simplicial complexes", "cat3"};
  app.require_subcommand(1);
  std::function<int()> run;
  Input in;

  auto* validate = app.add_subcommand("validate", "parse a complex and print its summary");
  add_input(validate, in);
  validate->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      out << "VERTICES: " << l.k().vertex_count() << "\nDIMENSION: " << l.k().dimension()
          << "\nMAXIMAL_SIMPLICES: " << l.k().maximal_simplices().size()
          << "\nDECLARED_CAT0: " << yes(l.doc.declared_cat0) << "\nVALID: true\n";
      return 0;
    };
  });

  auto* curvature = app.add_subcommand("curvature", "run the necessary CAT(0) checks");
  add_input(curvature, in);
  curvature->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      const CurvatureReport r = certify_cat0_necessary(k);
      out << "FLAG: " << yes(r.flag.flag) << '\n';
      if (!r.flag.flag) out << "FLAG_WITNESS: " << show(k, r.flag.witness) << '\n';
      for (const auto& [n, w] : r.empty_ngons)
        out << "EMPTY_" << n << "GON: " << (w ? show(k, *w) : std::string("none")) << '\n';
      out << "SYSTOLIC: " << yes(r.systolic.systolic) << '\n';
      if (!r.systolic.systolic) {
        out << "SYSTOLIC_FAILURE: " << r.systolic.reason << '\n';
        if (r.systolic.failing_simplex) {
          const auto& s = *r.systolic.failing_simplex;
          out << "SYSTOLIC_SIMPLEX: " << (s.empty() ? std::string("empty") : show(k, s)) << '\n';
        }
        out << "SYSTOLIC_WITNESS: " << show(k, r.systolic.witness) << '\n';
      }
      if (r.edge_links) {
        out << "EDGE_LINKS: " << yes(r.edge_links->ok) << '\n';
        if (r.edge_links->worst_edge) {
          out << "EDGE_LINK_WORST_EDGE: " << show(k, r.edge_links->worst_edge->vertices()) << '\n';
          out << "EDGE_LINK_WORST_CYCLE: " << show(k, r.edge_links->worst_cycle) << '\n';
          std::ostringstream len;
          len.precision(15);
          len << r.edge_links->worst_length;
          out << "EDGE_LINK_WORST_LENGTH: " << len.str() << '\n';
        }
      } else {
        out << "EDGE_LINKS: not-applicable\n";
      }
      out << "PASSES: " << yes(r.passes) << '\n';
      return r.passes ? 0 : 1;
    };
  });

  std::string from, to;
  auto* distance = app.add_subcommand("distance", "combinatorial distance between two vertices");
  distance->add_option("from", from)->required();
  distance->add_option("to", to)->required();
  add_input(distance, in);
  distance->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const int d = l.k().distance(l.k().vertex(from), l.k().vertex(to));
      out << "DISTANCE: " << d << '\n';
      return 0;
    };
  });

  std::size_t limit = 100000;
  auto* geodesics = app.add_subcommand("geodesics", "list every geodesic between two vertices");
  geodesics->add_option("from", from)->required();
  geodesics->add_option("to", to)->required();
  geodesics->add_option("--limit", limit, "maximum number of geodesics");
  add_input(geodesics, in);
  geodesics->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      const auto all = enumerate_geodesics(k, k.vertex(from), k.vertex(to), limit);
      out << "LENGTH: " << k.distance(k.vertex(from), k.vertex(to)) << "\nCOUNT: " << all.size() << '\n';
      for (const auto& g : all) out << "GEODESIC: " << show(k, g) << '\n';
      return 0;
    };
  });

  std::vector<std::string> path_names;
  std::optional<int> max_area;
  std::size_t max_disks = 200000;
  std::string svg_prefix;
  auto* span = app.add_subcommand("span-disk", "minimal spanning disks of a closed path");
  span->add_option("path", path_names, "vertices of the loop")->required();
  span->add_option("--max-area", max_area);
  span->add_option("--max-disks", max_disks);
  span->add_option("--svg", svg_prefix, "write PREFIX-<i>.svg for each nonsingular disk");
  add_input(span, in);
  span->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      Path loop = to_path(k, path_names);
      if (!loop.empty() && loop.front() != loop.back()) loop.push_back(loop.front());
      SpanOptions o;
      o.max_area = max_area;
      o.max_disks = max_disks;
      o.declared_cat0 = l.doc.declared_cat0 && k.dimension() <= 3;
      const auto disks = minimal_spanning_disks(k, loop, o);
      out << "AREA: " << (disks.empty() ? 0 : disks.front().area()) << "\nCOUNT: " << disks.size() << '\n';
      for (std::size_t i = 0; i < disks.size(); ++i) {
        const auto& d = disks[i];
        out << "DISK: " << i << "\nINTERIOR_VERTICES: " << d.interior_vertices().size() << "\nCAT0_DISK: "
            << yes(is_cat0_disk(d)) << '\n'
            << serialize_disk(k, d);
        if (!svg_prefix.empty() && validate_disk(d).nonsingular) {
          std::ofstream(svg_prefix + "-" + std::to_string(i) + ".svg") << export_disk_svg(k, d);
        }
      }
      return 0;
    };
  });

  std::string target;
  auto* straighten_cmd = app.add_subcommand("straighten", "basic moves from a path to a geodesic");
  straighten_cmd->add_option("path", path_names, "vertices of the path")->required();
  straighten_cmd->add_option("--to", target, "target geodesic, comma separated");
  add_input(straighten_cmd, in);
  straighten_cmd->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      const Path alpha = to_path(k, path_names);
      std::optional<Path> beta;
      if (!target.empty()) beta = to_path(k, split_list(target));
      const StraightenResult r = straighten(k, alpha, beta);
      out << "MOVES: " << r.moves.size() << '\n';
      for (const auto& m : r.moves) out << "MOVE: " << format_move(k, m) << '\n';
      out << "RESULT: " << show(k, r.path) << "\nLENGTH: " << path_length(r.path) << '\n';
      return 0;
    };
  });

  auto* gs_geodesic = app.add_subcommand("gs-geodesic", "a GS-geodesic by resolving bad pairs");
  gs_geodesic->add_option("from", from)->required();
  gs_geodesic->add_option("to", to)->required();
  std::string start;
  gs_geodesic->add_option("--start", start, "geodesic to start from, comma separated");
  add_input(gs_geodesic, in);
  gs_geodesic->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      GsOracle oracle(k);
      const Path gamma = start.empty() ? enumerate_geodesics(k, k.vertex(from), k.vertex(to)).front()
                                       : to_path(k, split_list(start));
      if (gamma.front() != k.vertex(from) || gamma.back() != k.vertex(to))
        throw Error(Errc::EndpointMismatch, "--start does not join the endpoints");
      const Resolution r = oracle.resolve(gamma);
      out << "START: " << show(k, gamma) << "\nMOVES: " << r.moves.size() << '\n';
      for (const auto& m : r.moves) out << "MOVE: " << format_move(k, m) << '\n';
      out << "GS_GEODESIC: " << show(k, r.path) << "\nIS_GS: " << yes(oracle.is_gs(r.path)) << '\n';
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify-gs", "check the GS condition on a geodesic");
  verify->add_option("path", path_names, "vertices of the geodesic")->required();
  add_input(verify, in);
  verify->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      const Path gamma = to_path(k, path_names);
      require_valid_path(k, gamma);
      if (!is_geodesic(k, gamma)) throw Error(Errc::NotGeodesic, "path is not a geodesic");
      GsOracle oracle(k);
      const auto bad = oracle.bad_pairs(gamma);
      out << "WITNESS_DISKS: " << oracle.witnesses(gamma).size() << "\nBAD_PAIRS: " << bad.size() << '\n';
      for (const auto& b : bad) {
        out << "BAD_PAIR: " << k.name(gamma[b.index - 1]) << ' ' << k.name(gamma[b.index]) << " index "
            << b.index << " degrees " << b.degree_prev << ' ' << b.degree << " companion " << show(k, b.delta);
        if (b.apex) out << " apex " << k.name(*b.apex);
        out << '\n';
      }
      out << "IS_GS: " << yes(bad.empty()) << '\n';
      return bad.empty() ? 0 : 1;
    };
  });

  double ft_k = 2.0;
  int ft_l = 1;
  std::string system = "gs";
  std::string basepoints;
  auto* fellow = app.add_subcommand("fellow-travel", "check the (k,l)-fellow traveller property");
  fellow->add_option("k", ft_k)->required();
  fellow->add_option("l", ft_l)->required();
  fellow->add_option("--system", system, "gs or geodesic")->check(CLI::IsMember({"gs", "geodesic"}));
  fellow->add_option("--basepoints", basepoints, "comma separated");
  add_input(fellow, in);
  fellow->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      std::vector<VertexId> bps = to_path(k, split_list(basepoints));
      GsOracle oracle(k);
      const PathSystem s = system == "gs" ? gs_system(oracle, bps) : geodesic_system(k, bps);
      const auto r = check_fellow_travel(k, s, ft_k, ft_l);
      out << "SYSTEM: " << system << "\nPATHS: " << s.members.size() << "\nMAX_DISTANCE: " << r.max_distance
          << "\nFELLOW_TRAVEL: " << (r.ok ? "pass" : "fail") << '\n';
      if (r.worst) out << "WORST: " << show(k, r.worst->first) << " | " << show(k, r.worst->second) << '\n';
      return r.ok ? 0 : 1;
    };
  });

  std::string format = "text";
  bool check = false;
  auto* fsa = app.add_subcommand("fsa", "build the geodesic or GS acceptor");
  fsa->add_option("--system", system, "gs or geodesic")->check(CLI::IsMember({"gs", "geodesic"}));
  fsa->add_option("--basepoints", basepoints, "comma separated");
  fsa->add_option("--format", format, "text, dot or none")->check(CLI::IsMember({"text", "dot", "none"}));
  fsa->add_flag("--check", check, "compare the language with the brute-force path system");
  add_input(fsa, in);
  fsa->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      const std::vector<VertexId> bps = to_path(k, split_list(basepoints));
      GsOracle oracle(k);
      const Dfa m = system == "gs" ? gs_fsa(oracle, bps, l.symmetries) : geodesic_fsa(k, bps);
      const PathAlphabet alphabet(k);
      const auto accepted = accepted_paths(m, alphabet, static_cast<std::size_t>(k.diameter()) + 1);
      out << "SYSTEM: " << system << "\nSTATES: " << m.state_count() << "\nALPHABET: " << alphabet.size()
          << "\nACCEPTED: " << accepted.size() << '\n';
      int code = 0;
      if (check) {
        const PathSystem s = system == "gs" ? gs_system(oracle, bps) : geodesic_system(k, bps);
        const bool same = std::set<Path>(accepted.begin(), accepted.end()) == s.members;
        out << "LANGUAGE_MATCHES: " << yes(same) << '\n';
        code = same ? 0 : 1;
      }
      if (format == "text") out << m.to_text();
      if (format == "dot") out << m.to_dot(alphabet.names());
      return code;
    };
  });

  std::string disk_file, out_file;
  auto* svg = app.add_subcommand("export-svg", "draw a disk diagram as SVG");
  svg->add_option("--disk", disk_file, "disk file");
  svg->add_option("--loop", target, "draw the first minimal disk of this loop, comma separated");
  svg->add_option("-o,--out", out_file, "output file (stdout by default)");
  add_input(svg, in);
  svg->callback([&] {
    run = [&] {
      const Loaded l = load(in);
      const auto& k = l.k();
      DiskDiagram d;
      if (!disk_file.empty()) {
        std::ifstream f(disk_file);
        if (!f) throw Usage("cannot read " + disk_file);
        std::ostringstream text;
        text << f.rdbuf();
        d = parse_disk(k, text.str());
      } else if (!target.empty()) {
        Path loop = to_path(k, split_list(target));
        if (!loop.empty() && loop.front() != loop.back()) loop.push_back(loop.front());
        d = minimal_spanning_disks(k, loop).front();
      } else {
        throw Usage("one of --disk or --loop is required");
      }
      const std::string text = export_disk_svg(k, d);
      if (out_file.empty()) out << text;
      else std::ofstream(out_file) << text;
      return 0;
    };
  });

  std::string spec;
  auto* generate = app.add_subcommand("generate", "print a generated fixture as a complex file");
  generate->add_option("fixture", spec, "NAME[:params]; `list` prints the names")->required();
  generate->add_option("-o,--out", out_file, "output file (stdout by default)");
  generate->callback([&] {
    run = [&] {
      if (spec == "list") {
        for (const auto& n : fixture_names()) out << n << '\n';
        return 0;
      }
      const std::string text = serialize_complex(document_of(generate_fixture(spec)));
      if (out_file.empty()) out << text;
      else std::ofstream(out_file) << text;
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Usage& e) {
    err << "ERROR: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "ERROR: " << e.what() << '\n';
    return code_for(e.code());
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cat3
