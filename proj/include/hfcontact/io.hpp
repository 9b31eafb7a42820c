#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hfcontact/diagram.hpp"
#include "hfcontact/openbook.hpp"
#include "hfcontact/surgery.hpp"

namespace hf {

struct Diagnostic {
  int line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
};

class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

/// Optional names for generators (vertex ids in alpha order) and region labels.
struct Annotations {
  std::vector<std::pair<std::string, std::vector<int>>> generators;
  std::vector<std::pair<std::string, int>> regions;
  bool empty() const { return generators.empty() && regions.empty(); }
  friend bool operator==(const Annotations&, const Annotations&) = default;
};

/// Twist curve given either as a boundary component or as a closed walk of exits.
struct TwistSpec {
  std::optional<int> boundary;
  std::vector<int> walk;
  int sign = 1;
  friend bool operator==(const TwistSpec&, const TwistSpec&) = default;
};

enum class DocumentKind { OpenBook, Diagram, Surgery };

const char* kind_name(DocumentKind k);

struct Document {
  DocumentKind kind = DocumentKind::Diagram;
  std::string name;
  std::string description;

  // open book
  std::vector<std::vector<int>> rotations;
  std::vector<int> arcs;  // half-edges whose co-cores form the basis
  std::vector<TwistSpec> monodromy;

  // diagram
  HeegaardDiagram diagram;
  std::optional<std::vector<int>> contact;

  // surgery
  SurgeryPresentation surgery;

  // open book or diagram
  std::vector<FingerMove> finger_moves;
  Annotations annotations;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws InputError with line-numbered diagnostics.
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document load_document(const std::string& path);

/// Canonical text; parse_document(serialize(d)) == d, and canonical input round-trips byte for byte.
std::string serialize(const Document& d);

/// Builds the open book; throws InputError for surfaces, arcs or curves that do not make sense.
OpenBook to_open_book(const Document& d);

Document diagram_document(std::string name, std::string description, const HeegaardDiagram& d,
                          std::optional<std::vector<int>> contact, Annotations annotations = {});

/// Shipped example inputs.
struct FixtureInfo {
  std::string name;
  std::string provenance;
};
std::vector<FixtureInfo> list_fixtures();
/// Text of a shipped fixture; throws std::out_of_range for unknown names.
const std::string& fixture_text(const std::string& name);

}  // namespace hf
