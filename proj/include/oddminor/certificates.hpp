#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "oddminor/coloring.hpp"
#include "oddminor/erdos_posa.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/odd_minor.hpp"
#include "oddminor/signed_graph.hpp"
#include "oddminor/structure.hpp"
#include "oddminor/subdivision.hpp"

namespace oddminor {

inline constexpr std::string_view kSchema = "odd-minor-kit/1";

/// FNV-1a 64 over "n m\n" followed by one "u v\n" line per edge in
/// lexicographic order.
std::uint64_t graph_hash(const Graph& g);

struct OddMinorBody {
  Graph pattern;
  OddMinorModel model;
  bool operator==(const OddMinorBody&) const = default;
};

struct SignedMinorBody {
  Graph pattern;
  EdgeSet sigma;
  SignedMinorModel model;
  bool operator==(const SignedMinorBody&) const = default;
};

struct SubdivisionBody {
  SubdivisionEmbedding embedding;
  bool bipartite = true;
  bool operator==(const SubdivisionBody&) const = default;
};

/// Packing or cover. Exactly one of s (odd S-paths) or embedding
/// (parity-breaking C-paths) is set; result.kind picks the certificate kind.
struct PathSystemBody {
  std::optional<VertexSet> s;
  std::optional<SubdivisionEmbedding> embedding;
  PackingCoverResult result;
  bool operator==(const PathSystemBody&) const = default;
};

struct DecompositionBody {
  SubdivisionEmbedding embedding;
  int max_apex = 0;
  Decomposition decomposition;
  bool operator==(const DecompositionBody&) const = default;
};

struct ColoringBody {
  ColoringAssignment coloring;
  FamilyClass family;
  bool operator==(const ColoringBody&) const = default;
};

using CertificateBody =
    std::variant<OddMinorBody, SignedMinorBody, SubdivisionBody, PathSystemBody, DecompositionBody, ColoringBody>;

struct Certificate {
  std::uint64_t graph_hash = 0;
  CertificateBody body;

  /// odd-minor-model, signed-minor-model, subdivision, packing, cover,
  /// decomposition or coloring.
  std::string kind() const;

  bool operator==(const Certificate&) const = default;
};

Certificate make_certificate(const Graph& g, CertificateBody body);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string serialize_certificate(const Certificate& c);

/// Strict parser: unknown or missing fields, a wrong schema tag and malformed
/// values throw InputError.
Certificate parse_certificate(std::string_view text);

/// Dispatches to the verifier for the certificate's kind. A graph whose hash
/// differs from the recorded one throws InputError.
Verdict verify_certificate(const Graph& g, const Certificate& c);

}  // namespace oddminor
