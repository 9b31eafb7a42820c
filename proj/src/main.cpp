#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hfcontact/openbook.hpp"
#include "hfcontact/pipeline.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kInternal = 2 };

struct Source {
  std::string path;
  std::string fixture;

  hf::Document load() const {
    if (!fixture.empty()) {
      try {
        return hf::parse_document(hf::fixture_text(fixture), fixture);
      } catch (const std::out_of_range& e) {
        throw hf::InputError(fixture, {{0, e.what()}});
      }
    }
    return hf::load_document(path);
  }
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("-i,--input", src.path, "input file")->check(CLI::ExistingFile);
  auto* fx = cmd->add_option("--fixture", src.fixture, "shipped fixture name instead of a file");
  in->excludes(fx);
  fx->excludes(in);
  cmd->callback([in, fx] {
    if (in->count() + fx->count() == 0) throw CLI::RequiredError("--input or --fixture");
  });
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hf::InputError(path, {{0, "cannot write file"}});
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Hat Heegaard Floer homology and contact invariants"};
  app.require_subcommand(1);

  Source src;
  std::string format = "human";
  std::string output;
  hf::PipelineConfig cfg;

  auto* compute = app.add_subcommand("compute", "run the full pipeline on an open book, diagram or surgery input");
  add_source(compute, src);
  compute->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));
  compute->add_flag("--oracle", cfg.oracle, "find domains by exhaustive region search");
  compute->add_option("--region-bound", cfg.region_bound, "largest region count the oracle accepts")->check(CLI::NonNegativeNumber);
  compute->add_option("--budget", cfg.budget, "finger move budget")->check(CLI::NonNegativeNumber);

  auto* surgery = app.add_subcommand("surgery", "H_1, c_1 and d_3 of a contact surgery presentation");
  add_source(surgery, src);
  surgery->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  auto* nicen = app.add_subcommand("nicen", "write the nice diagram produced from the input");
  add_source(nicen, src);
  nicen->add_option("--budget", cfg.budget, "finger move budget")->check(CLI::NonNegativeNumber);
  nicen->add_option("-o,--output", output, "output file (default stdout)");

  auto* from_ob = app.add_subcommand("from-openbook", "write the Heegaard diagram of an open book");
  add_source(from_ob, src);
  from_ob->add_option("-o,--output", output, "output file (default stdout)");

  auto* fixtures = app.add_subcommand("fixtures", "list shipped fixtures");
  std::string show;
  fixtures->add_option("--show", show, "print the text of one fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  auto fmt = format == "machine" ? hf::ReportFormat::Machine : hf::ReportFormat::Human;
  if (*fixtures) {
    if (!show.empty()) {
      try {
        std::cout << hf::fixture_text(show);
      } catch (const std::out_of_range& e) {
        throw hf::InputError(show, {{0, e.what()}});
      }
      return kOk;
    }
    for (const auto& f : hf::list_fixtures()) std::cout << f.name << "  " << f.provenance << "\n";
    return kOk;
  }
  auto doc = src.load();
  if (*compute) {
    if (doc.kind == hf::DocumentKind::Surgery)
      std::cout << hf::format_report(hf::run_surgery(doc), fmt);
    else
      std::cout << hf::format_report(hf::run_pipeline(doc, cfg), fmt);
  } else if (*surgery) {
    std::cout << hf::format_report(hf::run_surgery(doc), fmt);
  } else if (*nicen) {
    write_out(hf::serialize(hf::nicened_document(doc, cfg.budget)), output);
  } else if (*from_ob) {
    if (doc.kind != hf::DocumentKind::OpenBook) throw hf::InputError(doc.name, {{0, "expected an open book"}});
    write_out(hf::serialize(hf::raw_document(doc)), output);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    int code = hf::exit_status(std::current_exception());
    if (code == kInternal)
      std::cerr << "internal error: ";
    else if (!dynamic_cast<const hf::InputError*>(&e))
      std::cerr << "error: ";
    std::cerr << e.what() << "\n";
    return code;
  }
}
