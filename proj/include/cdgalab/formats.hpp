#pragma once

// Text formats for CDGAs, morphisms and truncated realizations.
//
// CDGA:        cap <int> | generator <name> <degree> | d <name> = <expr>
// Morphism:    source <path> | target <path> | map <name> = <expr>
// Realization: cap <int> | target <path> | gamma <degree> <dim> |
//              level <k> | basis <name> <degree> | attach <name> = <expr> |
//              null <name~> = <expr> | augment <name> = <expr>
// '#' starts a comment. Paths are relative to the file that names them.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdgalab/cdga.hpp"
#include "cdgalab/resolution.hpp"

namespace cdgalab {

struct CdgaFile {
  int cap = 0;
  int cap_line = 0;
  std::vector<Generator> generators;
  std::vector<int> generator_lines;
  std::vector<Assignment> differential;

  bool operator==(const CdgaFile& o) const;
};

/// Syntax only. Throws ParseError with the line number.
CdgaFile parse_cdga_file(std::string_view text);
/// Builds the CDGA; every semantic error is reported as a ParseError on the
/// line that introduced it.
CdgaPtr build_cdga(const CdgaFile& file);
CdgaPtr parse_cdga(std::string_view text);
std::string serialize_cdga(const FreeCdga& a);
CdgaFile describe_cdga(const FreeCdga& a);

struct MorphismFile {
  std::optional<std::string> source;
  std::optional<std::string> target;
  std::vector<Assignment> map;

  bool operator==(const MorphismFile& o) const;
};

MorphismFile parse_morphism_file(std::string_view text);
/// Unassigned source generators map to zero (see CdgaMorphism::defaulted).
CdgaMorphism build_morphism(const MorphismFile& file, const CdgaPtr& source, const CdgaPtr& target);
std::string serialize_morphism(const MorphismFile& file);

struct ResolutionFile {
  RealizationInput input;  // input.target stays empty until loaded
  std::optional<std::string> target_path;

  bool operator==(const ResolutionFile& o) const;
};

ResolutionFile parse_resolution_file(std::string_view text);
std::string serialize_resolution(const ResolutionFile& file);

// File-system helpers. Throw ParseError prefixed with the path.
std::string read_text(const std::filesystem::path& path);
CdgaPtr load_cdga(const std::filesystem::path& path);

struct LoadedMorphism {
  CdgaMorphism morphism;
  std::vector<std::string> defaulted;
};
LoadedMorphism load_morphism(const std::filesystem::path& path);

struct LoadedResolution {
  ResolutionFile file;
  TruncatedRealization realization;
};
LoadedResolution load_resolution(const std::filesystem::path& path, const AssembleOptions& options = {});

}  // namespace cdgalab
