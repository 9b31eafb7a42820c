#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "hfcontact/diagram.hpp"
#include "hfcontact/floer.hpp"
#include "hfcontact/io.hpp"
#include "hfcontact/spinc.hpp"
#include "hfcontact/surgery.hpp"

namespace hf {

enum class ReportFormat { Human, Machine };

struct PipelineConfig {
  int budget = 64;  // finger moves, recorded ones included
  bool oracle = false;
  int region_bound = kOracleRegionBound;
  ReportFormat format = ReportFormat::Human;
};

struct BlockReport {
  std::vector<int> generators;
  Homology homology;
};

struct Report {
  std::string name;
  DocumentKind input_kind = DocumentKind::Diagram;
  std::vector<RegionInfo> raw_regions;
  bool raw_nice = false;
  std::vector<FingerMove> moves;
  int recorded_moves = 0;

  HeegaardDiagram diagram;  // nice, regions canonical
  std::vector<RegionInfo> regions;
  std::vector<std::string> region_labels;  // by region id; basepoint region labelled "z"
  std::vector<int> region_rank;            // print order of regions inside a domain
  std::vector<std::string> generator_names;
  GF2ChainComplex complex;  // generators in report order

  SpincPartition spinc;
  std::vector<BlockReport> blocks;
  Homology total;

  std::optional<int> contact;  // generator index of X
  ContactStatus contact_status;
};

/// Throws InputError, PreconditionError or BudgetExceededError for bad input,
/// ConsistencyError when the complex is inconsistent.
Report run_pipeline(const Document& doc, const PipelineConfig& cfg = {});

struct SurgeryReport {
  std::string name;
  SurgeryPresentation presentation;
  linalg::IntMat linking;
  AbelianGroup h1;
  std::vector<std::int64_t> c1;  // PD(c_1) in the Smith coordinates of H_1
  bool c1_torsion = false;
  bool determined_by_c1 = false;
  std::optional<Rational> d3;
};

SurgeryReport run_surgery(const Document& doc);

/// "∂A = B by R_3+R_4" for generator i.
std::string differential_line(const Report& r, int i);
/// Sum of region labels, e.g. "R_3+R_4".
std::string domain_string(const Report& r, const RegionDomain& d);

std::string format_report(const Report& r, ReportFormat f);
std::string format_report(const SurgeryReport& r, ReportFormat f);

/// Diagram document of the input before any finger moves; recorded moves and annotations carry over.
Document raw_document(const Document& doc);
/// Nice diagram document (after recorded moves, heuristic nicening and region relabelling).
Document nicened_document(const Document& doc, int budget = 64);

/// Process exit status for an error escaping the driver: 1 for bad input, 2 for internal inconsistency.
int exit_status(std::exception_ptr e);

}  // namespace hf
