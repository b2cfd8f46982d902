#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "m3k/analysis.hpp"
#include "m3k/basis.hpp"
#include "m3k/catalog.hpp"
#include "m3k/checks.hpp"
#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"
#include "m3k/elasticity.hpp"
#include "m3k/family.hpp"
#include "m3k/iso.hpp"
#include "m3k/report.hpp"
#include "m3k/structures.hpp"

namespace m3k {

namespace {

using nlohmann::ordered_json;

// CLI11's vector overload expects the arguments reversed.
void parse_args(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
}

std::string mask_json_str(Mask m, const std::vector<std::string>& names) {
  return names.empty() ? format_mask(m) : format_mask(m, names);
}

NamedMatroid build_construct(const std::string& family, int n, int r, int p) {
  std::string spec = family;
  if (spec.find('(') == std::string::npos) {
    std::string upper = spec;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "UNIFORM" || upper == "U")
      spec = "U(" + std::to_string(r) + "," + std::to_string(n) + ")";
    else if (upper == "WHEEL" || upper == "WHIRL")
      spec = upper + "(" + std::to_string(r) + ")";
    else if (upper == "THETA" || upper == "THETAMINUS")
      spec = upper + "(" + std::to_string(n) + ")";
    else if (upper == "PG") {
      std::vector<std::vector<int>> rows(r);
      // all projective points over GF(p)^r as columns
      std::vector<std::vector<int>> pts;
      std::vector<int> v(r, 0);
      while (true) {
        int i = r - 1;
        while (i >= 0 && v[i] == p - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
        int first = 0;
        while (first < r && v[first] == 0) ++first;
        if (first < r && v[first] == 1) pts.push_back(v);
      }
      for (int row = 0; row < r; ++row) {
        rows[row].resize(pts.size());
        for (std::size_t cidx = 0; cidx < pts.size(); ++cidx)
          rows[row][cidx] = pts[cidx][row];
      }
      return {from_linear_rep(p, rows).with_provenance(
                  "PG(" + std::to_string(r - 1) + "," + std::to_string(p) + ")"),
              "PG(" + std::to_string(r - 1) + "," + std::to_string(p) + ")",
              {}};
    } else {
      spec = upper;  // MK4, F7, L8
    }
  }
  return parse_family(spec);
}

int cmd_construct(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"construct"};
  std::string family, outfile, format = "lex01";
  int n = 0, r = 0, p = 2;
  app.add_option("family", family)->required();
  app.add_option("--n", n);
  app.add_option("--r", r);
  app.add_option("--p", p);
  app.add_option("--out", outfile);
  app.add_option("--format", format)->check(CLI::IsMember({"lex01", "revlex_star"}));
  try {
    parse_args(app, args);
    const NamedMatroid nm = build_construct(family, n, r, p);
    const LineFormat fmt =
        format == "lex01" ? LineFormat::lex01 : LineFormat::revlex_star;
    std::ostringstream body;
    body << "# " << nm.name << "\n" << encode_line(nm.m, fmt) << "\n";
    if (outfile.empty()) {
      out << body.str();
    } else {
      std::ofstream f(outfile);
      if (!f) {
        err << "cannot write " << outfile << "\n";
        return 2;
      }
      f << body.str();
    }
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "construct: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "construct: " << ex.what() << "\n";
    return 2;
  }
}

ordered_json analyze_json(const NamedMatroid& nm, const std::optional<Matroid>& minor_n,
                          const std::optional<Mask>& basis_opt) {
  const Matroid& m = nm.m;
  const auto& names = nm.element_names;
  ordered_json j;
  j["name"] = nm.name;
  j["n"] = m.size();
  j["rank"] = m.rank();
  j["corank"] = m.corank();
  const bool three = is_n_connected(m, 3);
  j["three_connected"] = three;
  if (!names.empty()) j["element_names"] = names;

  EntryAnalysis a(m);
  std::optional<ElasticityReport> er;
  if (three && minor_n) er = elasticity_report(m, *minor_n);
  ordered_json elems = ordered_json::array();
  for (int e = 0; e < m.size(); ++e) {
    ordered_json je;
    je["index"] = e;
    if (!names.empty()) je["name"] = names[e];
    if (three) {
      const SiCoPair p = sico(m, e);
      je["si_3connected"] = p.si_3connected;
      je["co_3connected"] = p.co_3connected;
      je["elastic"] = p.si_3connected && p.co_3connected;
      if (er) {
        je["si_has_minor"] = er->detail[e].si_has_minor;
        je["co_has_minor"] = er->detail[e].co_has_minor;
        je["n_elastic"] = has_bit(er->n_elastic, e);
        je["n_revealing"] = has_bit(er->n_revealing, e);
      }
      if (basis_opt) {
        const bool in_b = has_bit(*basis_opt, e);
        je["in_basis"] = in_b;
        je["removable"] = in_b ? p.si_3connected : p.co_3connected;
      }
    }
    elems.push_back(std::move(je));
  }
  j["elements"] = std::move(elems);

  if (three) {
    j["elastic"] = mask_json_str(a.elastic_mask(), names);
    if (er) {
      j["n_elastic"] = mask_json_str(er->n_elastic, names);
      j["n_revealing"] = mask_json_str(er->n_revealing, names);
    }
    ordered_json fans = ordered_json::array();
    for (const FanOrdering& f : a.fans()) {
      ordered_json jf;
      std::ostringstream seq;
      for (std::size_t i = 0; i < f.elements.size(); ++i) {
        if (i) seq << ',';
        const int e = f.elements[i];
        seq << (names.empty() ? std::to_string(e) : names[e]);
      }
      jf["ordering"] = seq.str();
      jf["length"] = f.length();
      jf["first_window"] = f.first_is_triangle ? "triangle" : "triad";
      fans.push_back(std::move(jf));
    }
    j["maximal_fans"] = std::move(fans);

    ordered_json seps = ordered_json::array();
    for (const ThetaSeparator& t : a.separators()) {
      ordered_json jt;
      jt["W"] = mask_json_str(t.w, names);
      jt["Z"] = mask_json_str(t.z, names);
      jt["n"] = t.n;
      jt["variant"] = t.variant == ThetaSeparator::Variant::full ? "full" : "minus";
      jt["orientation"] =
          t.orientation == ThetaSeparator::Orientation::primal ? "primal" : "dual";
      if (minor_n) jt["reveals_minor"] = reveals(m, t, *minor_n);
      seps.push_back(std::move(jt));
    }
    j["theta_separators"] = std::move(seps);

    auto sep_list = [&](const std::vector<VerticalSep3>& list) {
      ordered_json arr = ordered_json::array();
      for (const VerticalSep3& s : list) {
        ordered_json js;
        js["X"] = mask_json_str(s.x, names);
        js["e"] = names.empty() ? std::to_string(s.e) : names[s.e];
        js["Y"] = mask_json_str(s.y, names);
        js["maximal"] = is_maximal_vertical(m, s);
        arr.push_back(std::move(js));
      }
      return arr;
    };
    j["vertical_3_separations"] = sep_list(vertical_3_separations(m));
    j["cyclic_3_separations"] = sep_list(cyclic_3_separations(m));

    if (basis_opt) {
      j["basis"] = mask_json_str(*basis_opt, names);
      j["removable"] = mask_json_str(removable_elements(m, *basis_opt), names);
      if (minor_n) {
        j["nb_robust"] = mask_json_str(nb_robust(m, *minor_n, *basis_opt), names);
        j["nb_strong"] = mask_json_str(nb_strong(m, *minor_n, *basis_opt), names);
      }
    }
  }
  return j;
}

void analyze_text(std::ostream& out, const ordered_json& j) {
  out << "matroid " << j["name"].get<std::string>() << ": n=" << j["n"] << " rank=" << j["rank"]
      << " corank=" << j["corank"]
      << (j["three_connected"].get<bool>() ? " 3-connected" : " not-3-connected") << "\n";
  if (!j["three_connected"].get<bool>()) return;
  out << "  elastic: " << j["elastic"].get<std::string>() << "\n";
  if (j.contains("n_elastic")) {
    out << "  n_elastic: " << j["n_elastic"].get<std::string>() << "\n";
    out << "  n_revealing: " << j["n_revealing"].get<std::string>() << "\n";
  }
  out << "  maximal fans:";
  for (const auto& f : j["maximal_fans"]) out << " (" << f["ordering"].get<std::string>() << ")";
  out << "\n  theta separators:";
  for (const auto& t : j["theta_separators"])
    out << " W=" << t["W"].get<std::string>() << " Z=" << t["Z"].get<std::string>() << " ["
        << t["variant"].get<std::string>() << "," << t["orientation"].get<std::string>() << "]";
  out << "\n  vertical 3-separations: " << j["vertical_3_separations"].size()
      << ", cyclic: " << j["cyclic_3_separations"].size() << "\n";
  if (j.contains("removable"))
    out << "  removable w.r.t. " << j["basis"].get<std::string>() << ": "
        << j["removable"].get<std::string>() << "\n";
  if (j.contains("nb_robust"))
    out << "  robust: " << j["nb_robust"].get<std::string>()
        << "  strong: " << j["nb_strong"].get<std::string>() << "\n";
}

int cmd_analyze(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"analyze"};
  std::string file, family, minor_spec, basis_str, report = "text";
  int index = 0;
  app.add_option("--file", file);
  app.add_option("--index", index);
  app.add_option("--family", family);
  app.add_option("--minor", minor_spec);
  app.add_option("--basis", basis_str);
  app.add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  try {
    parse_args(app, args);
    if (file.empty() == family.empty()) {
      err << "analyze: need exactly one of --file or --family\n";
      return 2;
    }
    NamedMatroid nm;
    if (!family.empty()) {
      nm = parse_family(family);
    } else {
      Catalog cat = load_catalog_spec(file);
      if (index < 0 || index >= static_cast<int>(cat.entries.size())) {
        err << "analyze: index " << index << " out of range (catalog holds "
            << cat.entries.size() << " entries)\n";
        return 2;
      }
      nm = {cat.entries[index].m, cat.entries[index].id, {}};
    }
    std::optional<Matroid> minor_n;
    if (!minor_spec.empty()) minor_n = parse_family(minor_spec).m;
    std::optional<Mask> basis_opt;
    if (!basis_str.empty()) {
      Mask b = 0;
      std::stringstream ss(basis_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) b |= bit(std::stoi(tok));
      if (!is_basis(nm.m, b)) {
        err << "analyze: " << format_mask(b) << " is not a basis\n";
        return 2;
      }
      basis_opt = b;
    }
    const ordered_json j = analyze_json(nm, minor_n, basis_opt);
    if (report == "json")
      out << j.dump(2) << "\n";
    else
      analyze_text(out, j);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "analyze: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "analyze: " << ex.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verify"};
  std::string check, catalog_spec, minors = "all", report = "text";
  int max_n = 0, jobs = 1, sample = 100;
  bool fail_fast = false, no_timing = false;
  app.add_option("--check", check)->required();
  app.add_option("--catalog", catalog_spec)->required();
  app.add_option("--max-n", max_n);
  app.add_option("--minors", minors);
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  app.add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--sample", sample);
  app.add_flag("--fail-fast", fail_fast);
  app.add_flag("--no-timing", no_timing);
  try {
    parse_args(app, args);
    std::vector<std::string> ids;
    if (check == "all") {
      ids = check_ids();
    } else {
      if (!is_check_id(check)) {
        err << "verify: unknown check id " << check << "\n";
        return 2;
      }
      ids.push_back(check);
    }
    CheckOptions opts;
    opts.jobs = jobs;
    opts.sample_budget = sample;
    opts.fail_fast = fail_fast;
    opts.with_timing = !no_timing;
    if (minors != "all" && !minors.empty()) {
      // split on commas outside parentheses
      std::string tok;
      int depth = 0;
      for (char c : minors + ",") {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
          if (!tok.empty()) opts.minors.push_back(parse_family(tok).m);
          tok.clear();
        } else {
          tok.push_back(c);
        }
      }
    }
    const Catalog cat = load_catalog_spec(catalog_spec, max_n);
    std::vector<CheckReport> reports;
    bool failed = false;
    for (const std::string& id : ids) {
      reports.push_back(run_check(id, cat, opts));
      if (!reports.back().passed()) {
        failed = true;
        if (fail_fast) break;
      }
    }
    out << render_reports(reports, report == "json" ? ReportFormat::json : ReportFormat::text);
    return failed ? 1 : 0;
  } catch (const CLI::ParseError& ex) {
    err << "verify: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "verify: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "usage: m3k <construct|analyze|verify> [options]\n"
           "  construct <family> [--n N] [--r R] [--p P] [--out FILE] "
           "[--format lex01|revlex_star]\n"
           "  analyze (--file F --index I | --family SPEC) [--minor SPEC] "
           "[--basis e1,e2,...] [--report json|text]\n"
           "  verify --check ID|all --catalog SPEC [--max-n K] [--minors all|SPEC,...] "
           "[--jobs J] [--report json|text] [--sample K] [--fail-fast] [--no-timing]\n";
    return 2;
  }
  const std::string cmd = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "construct") return cmd_construct(rest, out, err);
  if (cmd == "analyze") return cmd_analyze(rest, out, err);
  if (cmd == "verify") return cmd_verify(rest, out, err);
  err << "unknown subcommand: " << cmd << "\n";
  return 2;
}

}  // namespace m3k
