#include "hfcontact/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hfcontact/openbook.hpp"
#include "json_text.hpp"

namespace hf {

namespace {

using json = nlohmann::ordered_json;

struct Prepared {
  HeegaardDiagram raw;
  HeegaardDiagram nice;
  std::optional<std::vector<int>> contact;
  std::vector<FingerMove> moves;
  int recorded = 0;
};

HeegaardDiagram raw_diagram(const Document& doc, std::optional<std::vector<int>>& contact) {
  if (doc.kind == DocumentKind::OpenBook) {
    auto hd = build_heegaard(to_open_book(doc));
    contact = hd.contact.points;
    return hd.diagram;
  }
  if (doc.kind != DocumentKind::Diagram) throw InputError(doc.name, {{0, "expected an open book or a diagram"}});
  contact = doc.contact;
  return doc.diagram;
}

Prepared prepare(const Document& doc, int budget) {
  Prepared p;
  p.raw = raw_diagram(doc, p.contact);
  if (static_cast<int>(doc.finger_moves.size()) > budget)
    throw BudgetExceededError("the " + std::to_string(doc.finger_moves.size()) + " recorded finger moves exceed the budget of " +
                              std::to_string(budget));
  HeegaardDiagram d = p.raw;
  for (size_t i = 0; i < doc.finger_moves.size(); ++i) {
    try {
      d = finger_move(d, doc.finger_moves[i].base, doc.finger_moves[i].path);
    } catch (const PreconditionError& e) {
      throw InputError(doc.name, {{0, "finger move " + std::to_string(i) + ": " + e.what()}});
    }
  }
  p.moves = doc.finger_moves;
  p.recorded = static_cast<int>(doc.finger_moves.size());
  auto n = nicen(d, budget - p.recorded);
  p.moves.insert(p.moves.end(), n.moves.begin(), n.moves.end());
  p.nice = canonicalize_regions(n.diagram);
  return p;
}

std::string tuple_string(const std::vector<int>& pts) {
  std::string s = "(";
  for (size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
  return s + ")";
}

std::string polygon_name(int corners) {
  switch (corners) {
    case 2:
      return "bigon";
    case 4:
      return "square";
    case 6:
      return "hexagon";
    case 8:
      return "octagon";
  }
  return std::to_string(corners) + "-gon";
}

std::string region_shape(const RegionInfo& r) {
  if (r.is_disk()) return polygon_name(r.corners);
  return "non-disk (genus " + std::to_string(r.genus) + ", " + std::to_string(r.boundary_components) + " boundary components, " +
         std::to_string(r.corners) + " corners)";
}

std::string sum_string(const Report& r, const std::vector<int>& gens) {
  if (gens.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) s += (i ? "+" : "") + r.generator_names[gens[i]];
  return s;
}

std::string list_string(const std::vector<std::string>& items) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += i + 1 == items.size() ? " and " : ", ";
    s += items[i];
  }
  return s;
}

std::vector<const RegionDomain*> witnesses_from(const Report& r, int i) {
  std::vector<const RegionDomain*> out;
  for (const auto& [key, ws] : r.complex.witnesses)
    if (key.first == i)
      for (const auto& w : ws) out.push_back(&w);
  std::stable_sort(out.begin(), out.end(), [&](const RegionDomain* a, const RegionDomain* b) {
    if (a->to != b->to) return a->to < b->to;
    return domain_string(r, *a) < domain_string(r, *b);
  });
  return out;
}

std::vector<int> boundary_of(const Report& r, int i) {
  std::vector<int> out;
  for (int j = 0; j < r.complex.size(); ++j)
    if (r.complex.boundary(j, i) == GF2(1)) out.push_back(j);
  return out;
}

std::vector<std::string> names(const Report& r, const std::vector<int>& gens) {
  std::vector<std::string> out;
  for (int g : gens) out.push_back(r.generator_names[g]);
  return out;
}

json region_json(const Report& r, const std::vector<RegionInfo>& infos, bool labelled) {
  json a = json::array();
  for (const auto& x : infos) {
    json o;
    o["id"] = x.id;
    if (labelled) o["label"] = r.region_labels[x.id];
    o["corners"] = x.corners;
    o["disk"] = x.is_disk();
    if (!x.is_disk()) {
      o["genus"] = x.genus;
      o["boundary_components"] = x.boundary_components;
    }
    o["basepoint"] = x.contains_basepoint;
    a.push_back(o);
  }
  return a;
}

std::string census(const std::vector<RegionInfo>& infos) {
  std::map<std::string, int> count;
  for (const auto& x : infos)
    if (!x.contains_basepoint) ++count[region_shape(x)];
  std::vector<std::string> parts;
  for (const auto& [k, v] : count) parts.push_back(std::to_string(v) + " " + k);
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s.empty() ? "none" : s;
}

std::string machine(const Report& r) {
  json o;
  o["name"] = r.name;
  o["input"] = kind_name(r.input_kind);
  o["raw_diagram"] = json{{"nice", r.raw_nice}, {"regions", region_json(r, r.raw_regions, false)}};
  json moves = json::array();
  for (const auto& m : r.moves) moves.push_back(json{{"base", m.base}, {"path", m.path}});
  o["finger_moves"] = moves;
  o["recorded_moves"] = r.recorded_moves;
  o["regions"] = region_json(r, r.regions, true);
  json gens = json::array();
  for (int i = 0; i < r.complex.size(); ++i)
    gens.push_back(json{{"name", r.generator_names[i]}, {"points", r.complex.generators[i].points}});
  o["generators"] = gens;
  json diff = json::array();
  for (int i = 0; i < r.complex.size(); ++i) {
    json ws = json::array();
    for (const auto* w : witnesses_from(r, i)) {
      ws.push_back(json{{"to", r.generator_names[w->to]}, {"domain", domain_string(r, *w)}});
    }
    diff.push_back(json{{"from", r.generator_names[i]}, {"boundary", names(r, boundary_of(r, i))}, {"witnesses", ws},
                        {"line", differential_line(r, i)}});
  }
  o["differential"] = diff;
  json blocks = json::array();
  for (size_t b = 0; b < r.blocks.size(); ++b) {
    const auto& h = r.blocks[b].homology;
    blocks.push_back(json{{"s_xi", static_cast<int>(b) == r.spinc.xi_block},
                          {"generators", names(r, r.blocks[b].generators)},
                          {"rank", h.rank},
                          {"kernel", h.kernel},
                          {"dimension", h.dimension}});
  }
  o["spinc_blocks"] = blocks;
  json reps = json::array();
  for (const auto& rep : r.total.representatives) reps.push_back(names(r, rep));
  o["homology"] = json{{"rank", r.total.rank}, {"kernel", r.total.kernel}, {"dimension", r.total.dimension}, {"representatives", reps}};
  if (r.contact) {
    const auto& st = r.contact_status;
    json c{{"generator", r.generator_names[*r.contact]}, {"class", st.nonzero ? "nonzero" : "zero"}};
    if (st.nonzero)
      c["cocycle"] = names(r, st.functional);
    else
      c["primitive"] = names(r, st.primitive);
    o["contact"] = c;
  } else {
    o["contact"] = nullptr;
  }
  return write_json(o);
}

std::string human(const Report& r) {
  std::ostringstream os;
  os << r.name << " (" << kind_name(r.input_kind) << ")\n";
  os << "raw diagram: " << r.raw_regions.size() << " regions; without basepoint: " << census(r.raw_regions) << "; "
     << (r.raw_nice ? "nice" : "not nice") << "\n";
  for (const auto& x : r.raw_regions) {
    bool bad = !x.contains_basepoint && (!x.is_disk() || x.corners > 4);
    os << "  " << (bad ? "bad region " : "region ") << x.id << ": " << region_shape(x) << (x.contains_basepoint ? ", basepoint" : "") << "\n";
  }
  os << "finger moves: " << r.moves.size() << " (" << r.recorded_moves << " recorded)\n";
  for (const auto& m : r.moves) {
    os << "  base " << m.base << " across";
    for (int a : m.path) os << " " << a;
    os << "\n";
  }
  os << "regions: " << r.regions.size() << "; without basepoint: " << census(r.regions) << "\n";
  std::vector<int> order(r.regions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r.region_rank[a] < r.region_rank[b]; });
  for (int k : order) {
    const auto& x = r.regions[k];
    os << "  " << r.region_labels[k] << " = region " << k << ": " << region_shape(x) << (x.contains_basepoint ? ", basepoint" : "")
       << "\n";
  }
  os << "generators: " << r.complex.size() << "\n";
  for (int i = 0; i < r.complex.size(); ++i)
    os << "  " << r.generator_names[i] << " = " << tuple_string(r.complex.generators[i].points) << "\n";
  os << "differential:\n";
  for (int i = 0; i < r.complex.size(); ++i) os << "  " << differential_line(r, i) << "\n";
  os << "spin^c blocks: " << r.blocks.size() << "\n";
  for (size_t b = 0; b < r.blocks.size(); ++b) {
    const auto& h = r.blocks[b].homology;
    os << "  " << (static_cast<int>(b) == r.spinc.xi_block ? "s_xi" : "block " + std::to_string(b)) << " ("
       << r.blocks[b].generators.size() << "): " << list_string(names(r, r.blocks[b].generators)) << "; rank " << h.rank << ", kernel "
       << h.kernel << ", dimension " << h.dimension << "\n";
  }
  os << "homology: rank " << r.total.rank << ", kernel " << r.total.kernel << ", dimension " << r.total.dimension << "\n";
  os << "  representatives:";
  for (const auto& rep : r.total.representatives) os << " [" << sum_string(r, rep) << "]";
  os << "\n";
  if (r.contact) {
    const auto& st = r.contact_status;
    os << "contact class: " << (st.nonzero ? "NONZERO" : "ZERO") << ", ";
    if (st.nonzero)
      os << "cocycle " << sum_string(r, st.functional) << " pairs to 1 with " << r.generator_names[*r.contact] << "\n";
    else
      os << r.generator_names[*r.contact] << " = ∂(" << sum_string(r, st.primitive) << ")\n";
  } else {
    os << "contact class: no contact generator given\n";
  }
  return os.str();
}

std::string term(std::int64_t coef, const std::string& name) {
  if (coef == 1) return name;
  if (coef == -1) return "-" + name;
  return std::to_string(coef) + name;
}

std::string signed_sum(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
  std::string s;
  for (const auto& [c, n] : terms) {
    if (c == 0) continue;
    std::string t = term(c, n);
    if (!s.empty() && t[0] != '-') s += "+";
    s += t;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string domain_string(const Report& r, const RegionDomain& d) {
  std::vector<int> ks;
  for (int k = 0; k < static_cast<int>(d.coefficients.size()); ++k)
    if (d.coefficients[k] != 0) ks.push_back(k);
  std::sort(ks.begin(), ks.end(), [&](int a, int b) { return r.region_rank[a] < r.region_rank[b]; });
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (int k : ks) terms.push_back({d.coefficients[k], r.region_labels[k]});
  return signed_sum(terms);
}

std::string differential_line(const Report& r, int i) {
  std::string s = "∂" + r.generator_names[i] + " = ";
  auto ws = witnesses_from(r, i);
  if (ws.empty()) return s + "0";
  std::vector<int> targets;
  std::vector<std::string> doms;
  for (const auto* w : ws) {
    targets.push_back(w->to);
    doms.push_back(domain_string(r, *w));
  }
  s += sum_string(r, targets);
  auto reduced = boundary_of(r, i);
  if (reduced != targets) s += " = " + sum_string(r, reduced);
  return s + " by " + list_string(doms);
}

Report run_pipeline(const Document& doc, const PipelineConfig& cfg) {
  if (cfg.budget < 0) throw std::invalid_argument("budget must be non-negative");
  if (cfg.region_bound < 0) throw std::invalid_argument("region bound must be non-negative");
  auto p = prepare(doc, cfg.budget);
  Report r;
  r.name = doc.name;
  r.input_kind = doc.kind;
  r.raw_regions = regions(p.raw);
  r.raw_nice = is_nice(p.raw);
  r.moves = p.moves;
  r.recorded_moves = p.recorded;
  r.diagram = p.nice;
  r.regions = regions(r.diagram);
  const HeegaardDiagram& d = r.diagram;
  const int R = static_cast<int>(d.regions.size());

  r.region_labels.assign(R, "");
  r.region_rank.assign(R, 0);
  for (int k = 0; k < R; ++k) r.region_rank[k] = 1000000 + k;
  int rank = 0;
  for (const auto& [label, id] : doc.annotations.regions) {
    if (id < 0 || id >= R) throw InputError(doc.name, {{0, "region annotation \"" + label + "\" names missing region " + std::to_string(id)}});
    if (id == d.basepoint) throw InputError(doc.name, {{0, "region annotation \"" + label + "\" names the basepoint region"}});
    if (!r.region_labels[id].empty()) throw InputError(doc.name, {{0, "region " + std::to_string(id) + " is labelled twice"}});
    r.region_labels[id] = label;
    r.region_rank[id] = rank++;
  }
  for (int k = 0; k < R; ++k)
    if (r.region_labels[k].empty()) r.region_labels[k] = k == d.basepoint ? "z" : "r" + std::to_string(k);

  auto all = enumerate_generators(d);
  std::vector<Generator> gens;
  std::vector<std::string> gnames;
  std::vector<bool> used(all.size(), false);
  for (const auto& [name, pts] : doc.annotations.generators) {
    auto it = std::find(all.begin(), all.end(), Generator{pts});
    if (it == all.end())
      throw InputError(doc.name, {{0, "generator annotation \"" + name + "\" names " + tuple_string(pts) + ", which is not a generator"}});
    used[it - all.begin()] = true;
    gens.push_back(*it);
    gnames.push_back(name);
  }
  for (size_t i = 0; i < all.size(); ++i)
    if (!used[i]) {
      gens.push_back(all[i]);
      bool is_x = p.contact && all[i].points == *p.contact &&
                  std::find(gnames.begin(), gnames.end(), "X") == gnames.end();
      gnames.push_back(is_x ? "X" : tuple_string(all[i].points));
    }
  if (gens.empty()) throw PreconditionError("the diagram has no generators");
  r.generator_names = gnames;

  r.complex = differential(d, gens, cfg.oracle ? PolygonSearch::Oracle : PolygonSearch::Outline, cfg.region_bound);

  int ref = 0;
  if (p.contact) {
    ref = r.complex.index_of(Generator{*p.contact});
    if (ref < 0) throw PreconditionError("the contact point tuple is not a generator of the nice diagram");
    r.contact = ref;
  }
  r.spinc = partition_spinc(d, r.complex.generators, ref);
  if (!p.contact) r.spinc.xi_block = -1;
  for (const auto& [key, ws] : r.complex.witnesses)
    if (!ws.empty() && r.spinc.block_of[key.first] != r.spinc.block_of[key.second])
      throw ConsistencyError("a differential domain joins " + gnames[key.first] + " and " + gnames[key.second] +
                             ", which lie in different Spin^c classes");
  int dim = 0;
  for (const auto& b : r.spinc.blocks) {
    r.blocks.push_back({b, homology(r.complex, b)});
    dim += r.blocks.back().homology.dimension;
  }
  r.total = homology(r.complex);
  if (dim != r.total.dimension) throw ConsistencyError("block homologies do not add up to the total");
  if (r.contact) r.contact_status = contact_class_status(r.complex, *r.contact);
  return r;
}

SurgeryReport run_surgery(const Document& doc) {
  if (doc.kind != DocumentKind::Surgery) throw InputError(doc.name, {{0, "expected a surgery presentation"}});
  const auto& p = doc.surgery;
  try {
    check(p);
  } catch (const std::invalid_argument& e) {
    throw InputError(doc.name, {{0, e.what()}});
  }
  SurgeryReport r;
  r.name = doc.name;
  r.presentation = p;
  r.linking = linking_matrix(p);
  r.h1 = h1_of_surgery(p).group;
  r.c1 = c1_dual(p);
  r.c1_torsion = c1_is_torsion(p);
  r.determined_by_c1 = spinc_determined_by_c1(r.h1);
  if (r.c1_torsion) r.d3 = d3(p);
  return r;
}

std::string format_report(const Report& r, ReportFormat f) { return f == ReportFormat::Machine ? machine(r) : human(r); }

namespace {

std::string rational_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator()) : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string meridian_sum(const SurgeryPresentation& p) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (int i = 0; i < p.size(); ++i) terms.push_back({p.components[i].rot, "mu_" + std::to_string(i + 1)});
  return signed_sum(terms);
}

std::string class_string(const SurgeryReport& r) {
  bool zero = std::all_of(r.c1.begin(), r.c1.end(), [](std::int64_t v) { return v == 0; });
  if (zero) return "0";
  std::string s = "(";
  for (size_t i = 0; i < r.c1.size(); ++i) s += (i ? "," : "") + std::to_string(r.c1[i]);
  return s + ") in " + r.h1.str();
}

}  // namespace

std::string format_report(const SurgeryReport& r, ReportFormat f) {
  const auto& p = r.presentation;
  if (f == ReportFormat::Machine) {
    json o;
    o["name"] = r.name;
    o["input"] = "surgery";
    json q = json::array();
    for (int i = 0; i < r.linking.rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < r.linking.cols(); ++k) row.push_back(r.linking(i, k));
      q.push_back(row);
    }
    o["linking_matrix"] = q;
    o["h1"] = json{{"group", r.h1.str()}, {"free_rank", r.h1.free_rank}, {"torsion", r.h1.torsion}};
    o["c1_dual"] = json{{"meridians", meridian_sum(p)}, {"class", r.c1}, {"torsion", r.c1_torsion}};
    o["spinc_determined_by_c1"] = r.determined_by_c1;
    o["d3"] = r.d3 ? json(rational_string(*r.d3)) : json(nullptr);
    return write_json(o);
  }
  std::ostringstream os;
  os << r.name << " (surgery)\n";
  os << "components: " << p.size() << "\n";
  for (int i = 0; i < p.size(); ++i) {
    const auto& c = p.components[i];
    os << "  K_" << i + 1 << ": tb " << c.tb << ", rot " << c.rot << ", contact " << (c.coefficient > 0 ? "+1" : "-1") << "\n";
  }
  os << "linking matrix:\n";
  for (int i = 0; i < r.linking.rows(); ++i) {
    os << "  [";
    for (int k = 0; k < r.linking.cols(); ++k) os << (k ? " " : "") << r.linking(i, k);
    os << "]\n";
  }
  os << "H_1: " << r.h1.str() << "\n";
  os << "PD(c_1) = " << meridian_sum(p) << " = " << class_string(r) << "\n";
  os << "c_1 torsion: " << (r.c1_torsion ? "yes" : "no") << "\n";
  os << "spin^c determined by c_1: " << (r.determined_by_c1 ? "yes" : "no") << "\n";
  os << "d_3: " << (r.d3 ? rational_string(*r.d3) : "undefined (c_1 is not torsion)") << "\n";
  return os.str();
}

Document raw_document(const Document& doc) {
  std::optional<std::vector<int>> contact;
  auto raw = raw_diagram(doc, contact);
  Document out = diagram_document(doc.name, doc.description, raw, contact, doc.annotations);
  out.finger_moves = doc.finger_moves;
  return out;
}

Document nicened_document(const Document& doc, int budget) {
  auto p = prepare(doc, budget);
  return diagram_document(doc.name, doc.description, p.nice, p.contact, doc.annotations);
}

int exit_status(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const ConsistencyError&) {
    return 2;
  } catch (const InputError&) {
  } catch (const PreconditionError&) {
  } catch (const BudgetExceededError&) {
  } catch (const OracleUnavailableError&) {
  } catch (const InvalidBasisError&) {
  } catch (const StructureError&) {
  } catch (const InvalidCurveError&) {
  } catch (const UndefinedInvariantError&) {
  } catch (const std::invalid_argument&) {
  } catch (...) {
    return 2;
  }
  return 1;
}

}  // namespace hf
