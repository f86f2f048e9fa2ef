#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cat3/complex.hpp"
#include "cat3/disks.hpp"
#include "cat3/fixtures.hpp"

namespace cat3 {

/// A parsed `.cplx` file.
///
///   # comment
///   version 1
///   declared-cat0 true
///   dim-unrestricted true
///   simplex a b c d
///
/// Vertex ids follow the order of first appearance.
struct ComplexDocument {
  SimplicialComplex complex;
  bool declared_cat0 = false;
  bool dim_unrestricted = false;
};

/// Throws SyntaxError (with line), TooHighDimension, DisconnectedComplex.
ComplexDocument parse_complex(std::string_view text);
ComplexDocument load_complex(const std::filesystem::path& file);

/// Canonical text: header lines, then one line per maximal simplex with
/// names sorted, lines sorted.
std::string serialize_complex(const ComplexDocument& doc);

ComplexDocument document_of(const Fixture& f);

/// Throws DeclaredCat0Contradiction when the document is declared CAT(0)
/// but fails certify_cat0_necessary.
void check_declared_cat0(const ComplexDocument& doc);

///   disk 1
///   vertices N
///   label i name
///   triangle a b c
///   boundary i0 i1 ..
std::string serialize_disk(const SimplicialComplex& k, const DiskDiagram& d);
/// Throws SyntaxError, UnknownVertex; the result is validated against k.
DiskDiagram parse_disk(const SimplicialComplex& k, std::string_view text);

/// SVG 1.1 drawing of a nonsingular disk (Tutte embedding, boundary on a
/// circle). Throws SingularDisk.
std::string export_disk_svg(const SimplicialComplex& k, const DiskDiagram& d);

}  // namespace cat3
