#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "semichar/catalog.hpp"
#include "semichar/errors.hpp"
#include "semichar/fusion.hpp"
#include "semichar/lattice.hpp"
#include "semichar/realization.hpp"
#include "semichar/report.hpp"
#include "semichar/stabilize.hpp"

namespace semichar::cli {

namespace {

constexpr int kStabilizeTrials = 100;

struct Options {
  std::string group_file;
  std::string fusion_file;
  std::string catalog_name;
  bool all = false;
  std::string json_file;
  std::string report_file;
  std::size_t max_explicit = kDefaultMaxExplicit;
  std::optional<std::uint64_t> seed;
};

// Bad command line or unreadable file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::shared_ptr<const SubgroupLattice> load_lattice(const Options& o) {
  if (!o.catalog_name.empty()) return all_subgroups(catalog_entry(o.catalog_name).group);
  if (o.group_file.empty()) throw InputError("one of --group or --catalog is required");
  return all_subgroups(parse_group(read_file(o.group_file)));
}

FusionSystem load_fusion(const Options& o) {
  if (!o.catalog_name.empty()) {
    if (!o.group_file.empty() || !o.fusion_file.empty()) {
      throw InputError("--catalog cannot be combined with --group or --fusion");
    }
    return catalog_entry(o.catalog_name).fusion();
  }
  auto l = load_lattice(o);
  if (o.fusion_file.empty()) return inner_fusion(l);
  const auto gens = parse_fusion_generators(read_file(o.fusion_file), l->group());
  return close_fusion(l, gens);
}

std::string elements_string(const Subgroup& s) {
  std::string out;
  for (auto e : s.elements()) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

// decide_morphism against the explicit intertwiner search on every injective
// P -> S; nullopt when X is larger than the bound.
std::optional<bool> wreath_agrees(const SemicharBiset& b, std::size_t bound) {
  if (b.x_explicit.size() > bound) return std::nullopt;
  const auto& l = b.fusion.lattice();
  const auto& whole = l.subgroup(l.whole());
  for (SubgroupId p = 0; p < l.size(); ++p) {
    for (const auto& phi : monomorphisms(l.group(), l.subgroup(p), whole)) {
      if (decide_morphism(b, phi) != find_intertwiner(b, phi, bound).has_value()) return false;
    }
  }
  return true;
}

bool stabilize_trials(const SemicharBiset& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kStabilizeTrials; ++i) {
    const auto x0 = random_admissible(b.blocks, b.in_h, b.y0, rng);
    if (!check_stabilized(b.blocks, b.in_h, x0, stabilize(b.blocks, b.in_h, x0)).ok()) return false;
  }
  return true;
}

int cmd_subgroups(const Options& o, std::ostream& out) {
  const auto l = load_lattice(o);
  out << "|S| = " << l->group().order() << ", " << l->size() << " subgroups, " << l->num_classes()
      << " conjugacy classes\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (SubgroupId id = 0; id < l->size(); ++id) {
    const auto& s = l->subgroup(id);
    out << "subgroup " << id << " order " << s.order() << " class " << l->class_of(id)
        << " normalizer " << l->normalizer_order(id) << " elements " << elements_string(s) << "\n";
    rows.push_back({{"id", id},
                    {"order", s.order()},
                    {"class", l->class_of(id)},
                    {"normalizer_order", l->normalizer_order(id)},
                    {"elements", s.elements()}});
  }
  if (!o.json_file.empty()) write_file(o.json_file, rows.dump(2) + "\n");
  return kExitOk;
}

int cmd_close(const Options& o, std::ostream& out) {
  const auto f = load_fusion(o);
  const auto& l = f.lattice();
  std::ostringstream text;
  text << "|S| = " << l.group().order() << ", " << l.size() << " subgroups, "
       << f.total_morphisms() << " morphisms in total\n";
  nlohmann::ordered_json homs = nlohmann::ordered_json::array();
  for (SubgroupId p = 0; p < l.size(); ++p) {
    const auto n = f.homs_to_base(p).size();
    text << "|Hom(P, S)| = " << n << " for P = " << elements_string(l.subgroup(p)) << "\n";
    homs.push_back({{"subgroup", p}, {"homs_to_S", n}});
  }
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& cls : f_classes(f)) {
    text << "F-class:";
    for (auto p : cls) text << " " << p;
    text << "\n";
    classes.push_back(cls);
  }
  const auto audit = audit_fusion_system(f);
  const auto outs = out_reps(f).size();
  text << "|Out_F(S)| = " << outs << "\n";
  text << "axioms hold: " << (audit.ok() ? "yes" : "no") << "\n";
  out << text.str();
  if (!o.report_file.empty()) write_file(o.report_file, text.str());
  if (!o.json_file.empty()) {
    nlohmann::ordered_json j{{"group_order", l.group().order()},
                             {"num_subgroups", l.size()},
                             {"total_morphisms", f.total_morphisms()},
                             {"homs", homs},
                             {"f_classes", classes},
                             {"out_order", outs},
                             {"axioms_hold", audit.ok()}};
    write_file(o.json_file, j.dump(2) + "\n");
  }
  return audit.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto b = build_semichar(load_fusion(o));
  const auto& s = b.fusion.base();
  std::ostringstream text;
  text << "|S| = " << s.order() << ", |S x S| has " << b.ctx->gamma().size() << " subgroups in "
       << b.ctx->gamma().num_classes() << " classes\n";
  text << "m = " << b.m.get_str() << ", |X| = " << b.x_explicit.size() << "\n";
  text << "Y0 =\n" << serialize(*b.ctx, b.y0);
  text << "Y =\n" << serialize(*b.ctx, b.y);
  text << "X =\n" << serialize(*b.ctx, b.x);
  out << text.str();
  if (!o.report_file.empty()) write_file(o.report_file, text.str());
  if (!o.json_file.empty()) {
    nlohmann::ordered_json j{{"group_order", s.order()},
                             {"m", b.m.get_str()},
                             {"points", b.x_explicit.size()},
                             {"bifree", b.bifree},
                             {"y0", serialize(*b.ctx, b.y0)},
                             {"y", serialize(*b.ctx, b.y)},
                             {"x", serialize(*b.ctx, b.x)}};
    write_file(o.json_file, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const auto b = build_semichar(load_fusion(o));
  const auto r = verify_realization(b);
  const auto wreath = wreath_agrees(b, o.max_explicit);
  auto text = to_text(r);
  text += "intertwiner cross-check: ";
  text += !wreath ? "skipped (|X| above --max-explicit)" : *wreath ? "agrees" : "DISAGREES";
  text += "\n";
  out << text;
  if (!o.report_file.empty()) write_file(o.report_file, text);
  if (!o.json_file.empty()) write_file(o.json_file, to_json(r).dump(2) + "\n");
  const bool ok = r.passed() && wreath.value_or(true);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  std::vector<const CatalogEntry*> entries;
  if (!o.catalog_name.empty()) {
    entries.push_back(&catalog_entry(o.catalog_name));
  } else if (o.all) {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    throw InputError("catalog needs --all or --catalog <name>");
  }

  std::ostringstream text;
  text << std::left << std::setw(16) << "name" << std::setw(6) << "|S|" << std::setw(5) << "m"
       << std::setw(6) << "|X|" << std::setw(5) << "r" << std::setw(18) << "|G|" << std::setw(9)
       << "residue" << std::setw(10) << "realized" << std::setw(10) << "wreath";
  if (o.seed) text << std::setw(8) << "stab";
  text << "status\n";

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const auto* e : entries) {
    const auto b = build_semichar(e->fusion());
    const auto r = verify_realization(b);
    const auto wreath = wreath_agrees(b, o.max_explicit);
    std::optional<bool> stab;
    if (o.seed) stab = stabilize_trials(b, *o.seed);
    const bool ok = r.passed() && wreath.value_or(true) && stab.value_or(true);
    all_ok = all_ok && ok;

    text << std::setw(16) << e->name << std::setw(6) << r.group_order << std::setw(5)
         << r.m.get_str() << std::setw(6) << r.explicit_points << std::setw(5) << r.rank_r
         << std::setw(18) << r.order_g.get_str() << std::setw(9) << r.char_index_residue
         << std::setw(10) << (r.flags.realized ? "yes" : "no") << std::setw(10)
         << (!wreath ? "skip" : *wreath ? "agree" : "DISAGREE");
    if (o.seed) text << std::setw(8) << (*stab ? "ok" : "FAIL");
    text << (ok ? "pass" : "FAIL " + r.failing_flags()) << "\n";

    auto j = to_json(r);
    j["name"] = e->name;
    if (wreath) j["wreath_agrees"] = *wreath;
    if (stab) j["stabilize_ok"] = *stab;
    rows.push_back(std::move(j));
  }
  text << entries.size() << " entries, " << (all_ok ? "all pass" : "FAILURES") << "\n";
  out << text.str();
  if (!o.report_file.empty()) write_file(o.report_file, text.str());
  if (!o.json_file.empty()) write_file(o.json_file, rows.dump(2) + "\n");
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semicharacteristic bisets and realizations of fusion systems"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* sub, bool fusion) {
    sub->add_option("--group", o.group_file, "group file (order n, then n table rows)");
    if (fusion) sub->add_option("--fusion", o.fusion_file, "fusion generator file (gen: a->b, ...)");
    sub->add_option("--catalog", o.catalog_name, "built-in catalog entry");
    sub->add_option("--json", o.json_file, "write a JSON document here");
    sub->add_option("--report", o.report_file, "write the text report here");
  };
  auto* subgroups = app.add_subcommand("subgroups", "list subgroups and conjugacy classes");
  add_input(subgroups, false);
  auto* close = app.add_subcommand("close", "close a fusion system and summarize it");
  add_input(close, true);
  auto* build = app.add_subcommand("build", "build the left semicharacteristic biset");
  add_input(build, true);
  auto* realize = app.add_subcommand("realize", "build, verify and realize F = F_S(G)");
  add_input(realize, true);
  realize->add_option("--max-explicit", o.max_explicit, "bound on |X| for the intertwiner search");
  auto* cat = app.add_subcommand("catalog", "run realize over catalog entries");
  cat->add_flag("--all", o.all, "every entry");
  cat->add_option("--catalog", o.catalog_name, "a single entry");
  cat->add_option("--json", o.json_file, "write a JSON array of reports here");
  cat->add_option("--report", o.report_file, "write the table here");
  cat->add_option("--max-explicit", o.max_explicit, "bound on |X| for the intertwiner search");
  auto* seed_opt = cat->add_option("--seed", seed, "run randomized stabilization checks");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (seed_opt->count() > 0) o.seed = seed;

  try {
    if (*subgroups) return cmd_subgroups(o, out);
    if (*close) return cmd_close(o, out);
    if (*build) return cmd_build(o, out);
    if (*realize) return cmd_realize(o, out);
    return cmd_catalog(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kNotBifree:
      case ErrorKind::kPreconditionViolated:
      case ErrorKind::kHNotClosed:
      case ErrorKind::kNotABiset:
        return kExitVerificationFailed;
      default:
        return kExitInputError;
    }
  }
}

}  // namespace semichar::cli
