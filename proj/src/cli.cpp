#include "dehn/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dehn/balls.hpp"
#include "dehn/complexes.hpp"
#include "dehn/dehncalc.hpp"
#include "dehn/distortion.hpp"
#include "dehn/growth.hpp"
#include "dehn/presentations.hpp"

namespace dehn::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string decimal_ratio(const BigInt& num, const BigInt& den, int places) {
  BigInt q, r;
  BigInt::divmod(num, den, q, r);
  std::string out = q.to_string();
  out += '.';
  for (int i = 0; i < places; ++i) {
    r *= BigInt(10);
    BigInt digit, rem;
    BigInt::divmod(r, den, digit, rem);
    out += digit.to_string();
    r = rem;
  }
  return out;
}

ordered_json json_inventory(const Inventory& inv) {
  ordered_json j;
  j["schema_version"] = 1;
  j["group"] = inv.level.render();
  j["r"] = inv.r;
  ordered_json pieces = ordered_json::array();
  for (const auto& row : inv.rows()) {
    ordered_json p;
    p["kind"] = row.kind;
    p["count"] = row.count;
    p["area_each"] = row.area_each.to_string();
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  j["area"] = inv.area.to_string();
  if (inv.volume_lower) j["volume_lower"] = inv.volume_lower->to_string();
  if (inv.slab_reference) j["slab_reference"] = inv.slab_reference->to_string();
  j["attach_sites"] = inv.attach_sites;
  return j;
}

ordered_json json_presentation(const Presentation& p) {
  ordered_json j;
  j["schema_version"] = 1;
  j["level"] = p.level().render();
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators()) gens.push_back(g.render());
  j["generators"] = gens;
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.classified_relators()) rels.push_back(r.word.render());
  j["relators"] = rels;
  ordered_json kinds = ordered_json::array();
  for (const auto& r : p.classified_relators()) kinds.push_back(to_string(r.kind));
  j["relator_kinds"] = kinds;
  ordered_json edges = ordered_json::array();
  for (const auto& e : p.edge_groups()) {
    ordered_json eg;
    if (e.kind == EdgeGroupDescriptor::Kind::ProductF2kxF2) {
      eg["kind"] = "product_f2k_x_f2";
      ordered_json ff = ordered_json::array();
      for (const auto& v : e.free_factors) ff.push_back(v.render());
      eg["free_factors"] = ff;
      if (e.center) eg["center"] = e.center->render();
    } else {
      eg["kind"] = "semidirect_f2_by_f4";
      eg["index"] = e.index;
      eg["a_basis"] = e.a_basis.render();
      ordered_json f4 = ordered_json::array();
      for (const auto& v : e.f4_basis) f4.push_back(v.render());
      eg["f4_basis"] = f4;
    }
    edges.push_back(eg);
  }
  j["edge_groups"] = edges;
  return j;
}

int cmd_present(const std::string& level_s, const std::string& format,
                std::ostream& out) {
  Config cfg = Config::from_env();
  Presentation p = build_group(LevelTag::parse(level_s), cfg);
  if (format == "json") {
    out << json_presentation(p).dump(2) << "\n";
  } else {
    out << "level " << p.level().render() << "\n";
    out << "generators (" << p.generators().size() << "):";
    for (const auto& g : p.generators()) out << " " << g.render();
    out << "\n";
    out << "relators (" << p.relators().size() << "):\n";
    for (const auto& r : p.classified_relators())
      out << "  [" << to_string(r.kind) << "] " << r.word.render() << "\n";
    out << "edge groups (" << p.edge_groups().size() << "):\n";
    for (const auto& e : p.edge_groups()) {
      if (e.kind == EdgeGroupDescriptor::Kind::ProductF2kxF2) {
        out << "  product:";
        for (const auto& v : e.free_factors) out << " <" << v.render() << ">";
        if (e.center) out << " x center <" << e.center->render() << ">";
        out << "\n";
      } else {
        out << "  semidirect " << e.index << ": <" << e.a_basis.render()
            << "> by <" << e.f4_basis[0].render() << ", "
            << e.f4_basis[1].render() << ">\n";
      }
    }
  }
  return 0;
}

int cmd_lengths(int max_n, std::ostream& out) {
  Config cfg = Config::from_env();
  if (max_n < 0 || static_cast<std::uint64_t>(max_n) > cfg.w_index_cap)
    throw BudgetExceeded("lengths table capped at N <= " +
                         std::to_string(cfg.w_index_cap));
  out << "N,L,sum,ratio\n";
  for (int n = 0; n <= max_n; ++n) {
    BigInt L = phi_length(n);
    BigInt S = geometric_sum(n);
    out << n << "," << L.to_string() << "," << S.to_string() << ","
        << decimal_ratio(S, L, 6) << "\n";
  }
  return 0;
}

int cmd_growth(int n, int r, std::ostream& out) {
  Config cfg = Config::from_env();
  out << w_growth(n, r, cfg).to_string() << "\n";
  return 0;
}

int cmd_diagram(const std::string& type, int n, int i, int j, int k, int r,
                const std::string& emit, std::ostream& out) {
  Config cfg = Config::from_env();
  Diagram dia = type == "delta" ? build_delta(DeltaSpec{n, i, j, k, r}, cfg)
                                : build_theta(ThetaSpec{n, i, k, r}, cfg);
  if (emit == "json") {
    out << to_json(dia.complex) << "\n";
  } else if (emit == "dot") {
    out << to_dot(dia.complex);
  } else if (emit == "svg") {
    out << to_svg(dia.complex);
  } else {
    out << spec_name(dia.spec) << "\n";
    out << "faces " << dia.complex.area() << ", vertices "
        << dia.complex.vertex_count() << ", edges " << dia.complex.edges().size()
        << ", euler " << dia.complex.euler_characteristic() << "\n";
    out << "boundary " << boundary_word(dia.complex).render() << "\n";
  }
  return 0;
}

int cmd_sphere(const std::string& group, int r, bool want_explicit,
               bool no_volume, const std::string& emit, std::ostream& out) {
  Config cfg = Config::from_env();
  LevelTag level = LevelTag::parse(group);
  Inventory inv = build_sphere(level, r, !no_volume, cfg);
  ordered_json j = json_inventory(inv);
  if (want_explicit) {
    CellComplex cx = realize_explicit(level, r, cfg);
    Presentation p = build_group(level, cfg);
    ValidationReport rep = validate(cx, p);
    j["explicit"] = {{"faces", cx.area()},
                     {"euler", cx.euler_characteristic()},
                     {"validation", rep.summary()}};
  }
  if (emit == "json")
    out << j.dump(2) << "\n";
  else {
    out << "sphere " << inv.level.render() << " r=" << inv.r << " area "
        << inv.area.to_string();
    if (inv.volume_lower) out << " volume>= " << inv.volume_lower->to_string();
    out << "\n";
    for (const auto& row : inv.rows())
      out << "  " << row.count << " x " << row.kind << " (area "
          << row.area_each.to_string() << ")\n";
    if (want_explicit && j.contains("explicit"))
      out << "explicit: faces " << j["explicit"]["faces"] << ", "
          << std::string(j["explicit"]["validation"]) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& group, int r_max, std::ostream& out) {
  Config cfg = Config::from_env();
  LevelTag level = LevelTag::parse(group);
  out << "r,area_exact,vol_lower_exact,log_area,log_vol\n";
  for (int r = 1; r <= r_max; ++r) {
    Inventory inv = build_sphere(level, r, true, cfg);
    out << r << "," << inv.area.to_string() << ","
        << inv.volume_lower->to_string() << "," << std::setprecision(8)
        << inv.area.log_natural() << "," << inv.volume_lower->log_natural()
        << "\n";
  }
  return 0;
}

int cmd_distort(int n, int n_max, std::ostream& out) {
  Config cfg = Config::from_env();
  std::vector<DistortionSample> samples;
  for (int N = 1; N <= n_max; ++N)
    samples.push_back(make_witness(n, N, cfg).sample);
  DistortionReport rep = check_distortion_inequality(samples);
  out << "N,area_edge_exact,area_ambient_upper,log_edge,fitted_beta\n";
  for (const auto& s : samples)
    out << s.N << "," << s.area_edge_exact.to_string() << ","
        << s.area_ambient_upper.to_string() << "," << std::setprecision(8)
        << s.log_edge << "," << rep.beta << "\n";
  return 0;
}

int cmd_dehn_table(const std::string& format, int max_n, std::ostream& out) {
  auto rows = derive_table(max_n);
  if (format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      e["level"] = row.level.render();
      e["class"] = row.cls.render();
      e["rule"] = row.rule;
      e["audit"] = row.intermediate;
      arr.push_back(e);
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& row : rows)
      out << row.level.render() << "\t" << row.cls.render() << "\t"
          << row.rule << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& group, int r, std::ostream& out) {
  Config cfg = Config::from_env();
  LevelTag level = LevelTag::parse(group);
  CellComplex cx = realize_explicit(level, r, cfg);
  Presentation p = build_group(level, cfg);
  ValidationReport rep = validate(cx, p);
  out << rep.summary() << "\n";
  return rep.pass ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"combinatorial engine for recursive sphere fillings"};
  app.require_subcommand(1);

  std::string level = "H1", format = "text", emit = "text", type = "delta";
  std::string group = "H1";
  int max_n = 10, n = 1, r = 1, i = 1, j = 2, k = 0, r_max = 4, n_max = 8;
  int dehn_max_n = 4;
  bool want_explicit = false, no_volume = false;

  auto* present = app.add_subcommand("present", "print a level presentation");
  present->add_option("--level", level)->required();
  present->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lengths = app.add_subcommand("lengths", "length recurrence table");
  lengths->add_option("--max-n", max_n);

  auto* growth = app.add_subcommand("growth", "iterated growth value w_n(r)");
  growth->add_option("--n", n)->required();
  growth->add_option("--r", r)->required();

  auto* diagram = app.add_subcommand("diagram", "build a filling diagram");
  diagram->add_option("--type", type)->check(CLI::IsMember({"delta", "theta"}));
  diagram->add_option("--n", n);
  diagram->add_option("--i", i);
  diagram->add_option("--j", j);
  diagram->add_option("--k", k);
  diagram->add_option("--r", r);
  diagram->add_option("--emit", emit)
      ->check(CLI::IsMember({"text", "json", "dot", "svg"}));

  auto* sphere = app.add_subcommand("sphere", "sphere inventory");
  sphere->add_option("--group", group)->required();
  sphere->add_option("--r", r)->required();
  sphere->add_flag("--explicit", want_explicit);
  sphere->add_flag("--no-volume", no_volume);
  sphere->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));

  std::string out_format = "csv";
  auto* table = app.add_subcommand("table", "area/volume table (csv)");
  table->add_option("--group", group)->required();
  table->add_option("--r-max", r_max);
  table->add_option("--out", out_format)->check(CLI::IsMember({"csv"}));

  auto* distort = app.add_subcommand("distort", "distortion witnesses (csv)");
  distort->add_option("--n", n);
  distort->add_option("--N-max", n_max);
  distort->add_option("--out", out_format)->check(CLI::IsMember({"csv"}));

  auto* dehn_table = app.add_subcommand("dehn-table", "symbolic bound table");
  dehn_table->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  dehn_table->add_option("--max-n", dehn_max_n);

  auto* validate_cmd =
      app.add_subcommand("validate", "validate an explicit sphere");
  validate_cmd->add_option("--group", group)->required();
  validate_cmd->add_option("--r", r)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (present->parsed()) return cmd_present(level, format, out);
    if (lengths->parsed()) return cmd_lengths(max_n, out);
    if (growth->parsed()) return cmd_growth(n, r, out);
    if (diagram->parsed()) return cmd_diagram(type, n, i, j, k, r, emit, out);
    if (sphere->parsed())
      return cmd_sphere(group, r, want_explicit, no_volume, emit, out);
    if (table->parsed()) return cmd_table(group, r_max, out);
    if (distort->parsed()) return cmd_distort(n, n_max, out);
    if (dehn_table->parsed()) return cmd_dehn_table(format, dehn_max_n, out);
    if (validate_cmd->parsed()) return cmd_validate(group, r, out);
  } catch (const Error& e) {
    ordered_json jerr;
    jerr["error"] = {{"code", e.code()}, {"message", e.what()}};
    err << jerr.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json jerr;
    jerr["error"] = {{"code", "Internal"}, {"message", e.what()}};
    err << jerr.dump() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace dehn::cli
