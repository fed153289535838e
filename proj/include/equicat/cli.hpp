#pragma once

// Command-line surface: validate, gen-double, simples, subcats, centralize,
// check. Exit codes: 0 success, 1 usage, 2 parse, 3 validation, 4 property
// failure, 5 limits.

#include "equicat/checks.hpp"
#include "equicat/instance_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace equicat {

namespace cli_detail {

using json = nlohmann::ordered_json;

struct Options {
  std::string path;
  std::string spec;
  std::string format = "text";
  std::string dot_path;
  std::string datum_selector;
  bool all = false;
  std::string level = "full";
  std::string out_path;
  int limit_group = 48;
  int limit_subcats = 4096;
};

struct Session {
  RawInstance raw;
  std::unique_ptr<PointedCrossedCategory> cat;
  std::unique_ptr<IrrSet> irr;
};

inline Session open_session(const Options& opt) {
  Session s;
  s.raw = load_instance_file(opt.path);
  Limits lim;
  lim.group_order = opt.limit_group;
  lim.subcats = opt.limit_subcats;
  s.cat = validate_instance(s.raw, lim);
  s.irr = std::make_unique<IrrSet>(*s.cat);
  return s;
}

inline json instance_json(const Session& s) {
  const auto& cat = *s.cat;
  json j;
  j["G"] = s.raw.g_name;
  j["order_G"] = cat.g().n;
  j["X"] = s.raw.x_name;
  j["order_X"] = cat.x().n;
  j["scalar_order_declared"] = cat.declared_order();
  j["scalar_order"] = cat.scalar_order();
  j["orbits"] = cat.orbits().size();
  j["grading_image_order"] = cat.grading_image().order();
  return j;
}

inline std::string instance_text(const Session& s) {
  const auto& cat = *s.cat;
  std::ostringstream os;
  os << "instance: G=" << s.raw.g_name << " (order " << cat.g().n << "), X=" << s.raw.x_name
     << " (order " << cat.x().n << "), declared scalar order " << cat.declared_order()
     << ", working scalar order " << cat.scalar_order() << "\n"
     << "orbits: " << cat.orbits().size() << ", grading image order "
     << cat.grading_image().order() << "\n";
  return os.str();
}

inline json simple_json(const IrrSet& irr, int i) {
  const Simple& s = irr[i];
  json j;
  j["index"] = i;
  j["label"] = s.label();
  j["orbit_rep"] = s.orbit_rep;
  j["char_index"] = s.char_index;
  j["degree"] = irr.char_of(i).degree();
  j["stabilizer_order"] = irr.cat().orbits()[s.orbit].stab.grp.n;
  j["fpdim"] = s.fpdim;
  j["support"] = s.support;
  return j;
}

inline json datum_json(const FusionDatum& d, int scalar_order) {
  json j;
  j["H"] = d.h.members;
  j["Y"] = d.y.members;
  j["lambda_exponents"] = d.lam;
  j["scalar_order"] = scalar_order;
  return j;
}

inline std::string datum_text(const FusionDatum& d) { return d.label(); }

inline json checks_json(const std::vector<CheckItem>& items) {
  json arr = json::array();
  for (const auto& c : items) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.pass) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void emit(const Options& opt, const std::string& text, const json& j) {
  if (opt.format == "structured")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

inline int run_validate(const Options& opt) {
  Session s = open_session(opt);
  json j;
  j["instance"] = instance_json(s);
  j["valid"] = true;
  emit(opt, instance_text(s) + "valid\n", j);
  return 0;
}

inline int run_gen_double(const Options& opt) {
  RawInstance raw = gen_double(opt.spec);
  std::string text = serialize_instance(raw);
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw validation_error("cannot write file: " + opt.out_path);
    out << text;
  }
  return 0;
}

inline int run_simples(const Options& opt) {
  Session s = open_session(opt);
  const IrrSet& irr = *s.irr;
  std::ostringstream os;
  os << instance_text(s);
  os << "simples: " << irr.size() << "\n";
  os << "index  orbit_rep  stab_order  char_degree  fpdim  support\n";
  long long total = 0;
  json arr = json::array();
  for (int i = 0; i < irr.size(); ++i) {
    const Simple& sp = irr[i];
    os << i << "  x" << sp.orbit_rep << "  " << irr.cat().orbits()[sp.orbit].stab.grp.n << "  "
       << irr.char_of(i).degree() << "  " << sp.fpdim << "  {";
    for (size_t k = 0; k < sp.support.size(); ++k) os << (k ? "," : "") << sp.support[k];
    os << "}\n";
    total += sp.fpdim * sp.fpdim;
    arr.push_back(simple_json(irr, i));
  }
  os << "global dimension: " << total << "\n";
  json j;
  j["instance"] = instance_json(s);
  j["simples"] = std::move(arr);
  j["global_dimension"] = total;
  emit(opt, os.str(), j);
  return 0;
}

inline int run_subcats(const Options& opt) {
  Session s = open_session(opt);
  const IrrSet& irr = *s.irr;
  SubcategoryLattice lat = enumerate_subcategories(irr);
  std::ostringstream os;
  os << instance_text(s);
  os << "fusion subcategories: " << lat.subcats.size() << "\n";
  json arr = json::array();
  for (size_t i = 0; i < lat.subcats.size(); ++i) {
    const auto& sc = lat.subcats[i];
    os << "#" << i << " " << datum_text(sc.datum) << " FPdim=" << sc.fpdim << " members={";
    bool first = true;
    json members = json::array();
    for (int k = 0; k < irr.size(); ++k)
      if (sc.members[k]) {
        os << (first ? "" : ",") << k;
        first = false;
        members.push_back(k);
      }
    os << "}\n";
    json j = datum_json(sc.datum, s.cat->scalar_order());
    j["index"] = i;
    j["fpdim"] = sc.fpdim;
    j["members"] = std::move(members);
    arr.push_back(std::move(j));
  }
  if (!opt.dot_path.empty()) {
    std::ofstream out(opt.dot_path);
    if (!out) throw validation_error("cannot write file: " + opt.dot_path);
    out << lattice_dot(lat);
    os << "hasse diagram written to " << opt.dot_path << "\n";
  }
  json j;
  j["instance"] = instance_json(s);
  j["subcategories"] = std::move(arr);
  emit(opt, os.str(), j);
  return 0;
}

inline int run_centralize(const Options& opt) {
  Session s = open_session(opt);
  const IrrSet& irr = *s.irr;
  SubcategoryLattice lat = enumerate_subcategories(irr);
  Centralizers cz(irr);

  std::vector<int> selected;
  if (opt.all) {
    for (size_t i = 0; i < lat.subcats.size(); ++i) selected.push_back(static_cast<int>(i));
  } else if (!opt.datum_selector.empty()) {
    const std::string& sel = opt.datum_selector;
    if (sel.front() == '(') {
      // "(|H|,|Y|)": every datum with those component orders
      int ho = 0, yo = 0;
      if (std::sscanf(sel.c_str(), "(%d,%d)", &ho, &yo) != 2)
        throw validation_error("bad datum selector: " + sel);
      for (size_t i = 0; i < lat.subcats.size(); ++i)
        if (lat.subcats[i].datum.h.order() == ho && lat.subcats[i].datum.y.order() == yo)
          selected.push_back(static_cast<int>(i));
      if (selected.empty()) throw validation_error("no datum matches selector " + sel);
    } else {
      int idx = std::stoi(sel);
      if (idx < 0 || idx >= static_cast<int>(lat.subcats.size()))
        throw validation_error("datum index out of range: " + sel);
      selected.push_back(idx);
    }
  } else {
    throw CLI::ValidationError("centralize", "need --all or --datum SELECTOR");
  }

  std::ostringstream os;
  os << instance_text(s);
  os << "nondegenerate: " << (cz.nondegenerate() ? "yes" : "no") << "\n";
  os << "note: nondegeneracy is tested operationally as triviality of the Mueger center\n";
  json arr = json::array();
  bool all_pass = true;
  for (int idx : selected) {
    CentralizerReport rep = centralizer(cz, lat.subcats[idx]);
    int found = lat.find(rep.brute_members);
    os << "#" << idx << " " << datum_text(rep.input) << "\n";
    os << "  centralizer: subcategory #" << found << " " << datum_text(rep.brute_datum)
       << " FPdim=" << rep.brute_fpdim << "\n";
    os << "  closed-form prediction applicable: " << (rep.thm61_applicable ? "yes" : "no") << "\n";
    for (const auto& c : rep.checks) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (!c.pass) os << "  (" << c.witness << ")";
      os << "\n";
      all_pass = all_pass && c.pass;
    }
    json j;
    j["datum_index"] = idx;
    j["datum"] = datum_json(rep.input, s.cat->scalar_order());
    j["centralizer_index"] = found;
    j["centralizer_datum"] = datum_json(rep.brute_datum, s.cat->scalar_order());
    j["centralizer_fpdim"] = rep.brute_fpdim;
    j["closed_form_applicable"] = rep.thm61_applicable;
    j["checks"] = checks_json(rep.checks);
    arr.push_back(std::move(j));
  }
  json j;
  j["instance"] = instance_json(s);
  j["nondegenerate"] = cz.nondegenerate();
  j["nondegeneracy_criterion"] = "trivial Mueger center (operational substitute)";
  j["centralizers"] = std::move(arr);
  emit(opt, os.str(), j);
  return all_pass ? 0 : 4;
}

inline int run_check(const Options& opt) {
  Session s = open_session(opt);
  CheckLevel level = (opt.level == "fast") ? CheckLevel::fast : CheckLevel::full;
  auto items = run_checks(*s.cat, *s.irr, level);
  std::ostringstream os;
  os << instance_text(s);
  bool all_pass = true;
  for (const auto& c : items) {
    os << "[" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  (" << c.witness << ")";
    os << "\n";
    all_pass = all_pass && c.pass;
  }
  os << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  json j;
  j["instance"] = instance_json(s);
  j["level"] = opt.level;
  j["checks"] = checks_json(items);
  j["all_pass"] = all_pass;
  emit(opt, os.str(), j);
  return all_pass ? 0 : 4;
}

}  // namespace cli_detail

inline int cli_main(int argc, char** argv) {
  using namespace cli_detail;
  CLI::App app{"exact-arithmetic engine for equivariantizations of crossed pointed categories"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_path) {
    if (needs_path) sub->add_option("path", opt.path, "instance file")->required();
    sub->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--limit-group", opt.limit_group, "maximum group order");
    sub->add_option("--limit-subcats", opt.limit_subcats, "maximum subcategory count");
  };

  auto* validate = app.add_subcommand("validate", "validate an instance file");
  add_common(validate, true);
  auto* gen = app.add_subcommand("gen-double", "emit an untwisted double instance");
  gen->add_option("spec", opt.spec, "builtin (c1..c12, klein4, s3, d4, q8) or table file")
      ->required();
  gen->add_option("-o,--out", opt.out_path, "output file (stdout if omitted)");
  auto* simples = app.add_subcommand("simples", "list the simple objects");
  add_common(simples, true);
  auto* subcats = app.add_subcommand("subcats", "enumerate the fusion subcategory lattice");
  add_common(subcats, true);
  subcats->add_option("--dot", opt.dot_path, "write the Hasse diagram in DOT format");
  auto* centralize = app.add_subcommand("centralize", "compute Mueger centralizers");
  add_common(centralize, true);
  centralize->add_option("--datum", opt.datum_selector, "datum index or (|H|,|Y|) selector");
  centralize->add_flag("--all", opt.all, "process every subcategory");
  auto* check = app.add_subcommand("check", "run the property suite");
  add_common(check, true);
  check->add_option("--level", opt.level, "fast|full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (gen->parsed()) return run_gen_double(opt);
    if (simples->parsed()) return run_simples(opt);
    if (subcats->parsed()) return run_subcats(opt);
    if (centralize->parsed()) return run_centralize(opt);
    if (check->parsed()) return run_check(opt);
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const limit_error& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 5;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.get_name() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace equicat
