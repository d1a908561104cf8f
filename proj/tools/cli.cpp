#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lsqmc/discrepancy.hpp"
#include "lsqmc/errors.hpp"
#include "lsqmc/partition.hpp"
#include "lsqmc/scan.hpp"
#include "lsqmc/sequence.hpp"
#include "lsqmc/square.hpp"

namespace lsqmc::cli {

using json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rounds to the 12 significant digits written to CSV so JSON agrees with it.
json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(format_number(value).c_str(), nullptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_field(const json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_boolean()) {
    s = v.get<bool>() ? "true" : "false";
  } else if (v.is_number_float()) {
    s = format_number(v.get<double>());
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\r\n";
  }
}

json table_rows_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return rows;
}

LSParams parse_params(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected L,S but got '" + text + "'");
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw UsageError("expected L,S but got '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  return make_params(parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1)));
}

json params_json(LSParams p) {
  json j = json::object();
  j["L"] = p.long_count();
  j["S"] = p.short_count();
  j["gamma"] = number(p.gamma_float());
  return j;
}

json witness_json(const Box& box) {
  json j = json::object();
  j["x_lo"] = number(box.x_lo);
  j["x_hi"] = number(box.x_hi);
  j["y_lo"] = number(box.y_lo);
  j["y_hi"] = number(box.y_hi);
  j["count"] = box.count;
  return j;
}

const std::vector<std::string> kReportColumns = {"N",       "kind",    "dimension", "value",
                                                 "method",  "x_lo",    "x_hi",      "y_lo",
                                                 "y_hi",    "count"};

std::vector<json> report_row(const DiscrepancyReport& r) {
  return {r.n,
          to_string(r.kind),
          r.dimension,
          number(r.value),
          to_string(r.method),
          number(r.witness.x_lo),
          number(r.witness.x_hi),
          number(r.witness.y_lo),
          number(r.witness.y_hi),
          r.witness.count};
}

json report_json(const DiscrepancyReport& r) {
  json j = json::object();
  j["N"] = r.n;
  j["kind"] = to_string(r.kind);
  j["dimension"] = r.dimension;
  j["value"] = number(r.value);
  j["method"] = to_string(r.method);
  j["witness"] = witness_json(r.witness);
  return j;
}

// Shared output options.
struct Output {
  std::string format = "csv";
  std::string path;
};

void add_output_options(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", out.path, "Output file (default: stdout)");
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

void emit(const Output& o, const Table& table, json meta, std::ostream& out) {
  std::ostringstream text;
  if (o.format == "csv") {
    write_csv(table, text);
  } else {
    meta["rows"] = table_rows_json(table);
    text << meta.dump(2) << "\n";
  }
  emit_text(text.str(), o.path, out);
}

Table points_table(const PointList2D& pts) {
  Table t{{"i", "x", "y"}, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [x, y] = pts.point(i);
    t.rows.push_back({i + 1, number(x), number(y)});
  }
  return t;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string_view part(text.data() + start, end - start);
    std::size_t v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw UsageError("invalid grid '" + text + "'");
    }
    grid.push_back(v);
    start = end + 1;
  }
  return grid;
}

const char* kFooter = R"(Output columns (CSV header always present, JSON mirrors the CSV rows):
  gen        i, index, p, q, x            x = p + q*g (exact p, q)
  partition  i, left_p, left_q, left, len_exp, length
  disc1d     N, kind, dimension, value, method, x_lo, x_hi, y_lo, y_hi, count
  disc2d     same as disc1d; the witness box is [0,x_hi[ x [0,y_hi[
  vdc/halton i, x, y
  resonance  related, p, q, field_match, count_relation, count_checked_upto
  scan       N, [level,] D, ND, ND_logN, ND_log2N, ND_pow   (ND_pow = N*D / N^(1-tau))
Exit codes: 0 ok, 1 invalid arguments or parameters, 2 resource guard tripped.
LSQMC_MAX_INTERVALS overrides the partition size cap (default 1000000).)";

}  // namespace

std::string render_svg(const PointList2D& points, bool grid) {
  constexpr double kSize = 600.0;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  if (grid) {
    os << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
    for (int k = 1; k < 10; ++k) {
      const std::string c = format_number(kSize * k / 10.0);
      os << "<line x1=\"" << c << "\" y1=\"0\" x2=\"" << c << "\" y2=\"600\"/>\n";
      os << "<line x1=\"0\" y1=\"" << c << "\" x2=\"600\" y2=\"" << c << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g fill=\"black\">\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [x, y] = points.point(i);
    os << "<circle cx=\"" << format_number(x * kSize) << "\" cy=\""
       << format_number((1.0 - y) * kSize) << "\" r=\"1\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LS-sequences of partitions and points: generation, exact discrepancy, resonance"};
  app.name("lsqmc");
  app.footer(kFooter);
  app.require_subcommand(1, 1);

  std::string params_text;
  std::string p1_text;
  std::string p2_text;
  std::size_t count = 0;
  int level = 0;
  std::string svg_path;
  bool svg_grid = false;
  bool brute = false;
  std::string kind = "both";
  int max_exp = 12;
  std::string grid_text;
  std::string target = "seq-star";
  Output output;
  Output resonance_output;

  auto* gen = app.add_subcommand("gen", "First N points of an LS-sequence");
  gen->add_option("--params", params_text, "L,S")->required();
  gen->add_option("-N", count, "Number of points")->required()->check(CLI::PositiveNumber);
  add_output_options(gen, output, "csv");

  auto* partition = app.add_subcommand("partition", "Intervals of the LS-partition at level n");
  partition->add_option("--params", params_text, "L,S")->required();
  partition->add_option("-n", level, "Refinement level")->required()->check(CLI::NonNegativeNumber);
  add_output_options(partition, output, "csv");

  auto* disc1d = app.add_subcommand("disc1d", "Discrepancy of the first N sequence points");
  disc1d->add_option("--params", params_text, "L,S")->required();
  disc1d->add_option("-N", count, "Number of points")->required()->check(CLI::PositiveNumber);
  disc1d->add_option("--kind", kind, "star, extreme or both")
      ->check(CLI::IsMember({"star", "extreme", "both"}))
      ->capture_default_str();
  disc1d->add_flag("--brute-force", brute, "Use the critical-interval enumeration");
  add_output_options(disc1d, output, "csv");

  auto* disc2d = app.add_subcommand("disc2d", "2D star discrepancy (vdc with --params, Halton with --p1/--p2)");
  auto* d2_params = disc2d->add_option("--params", params_text, "L,S for the van der Corput set");
  auto* d2_p1 = disc2d->add_option("--p1", p1_text, "L,S on the x axis");
  auto* d2_p2 = disc2d->add_option("--p2", p2_text, "L,S on the y axis");
  d2_params->excludes(d2_p1)->excludes(d2_p2);
  d2_p1->needs(d2_p2);
  d2_p2->needs(d2_p1);
  disc2d->add_option("-N", count, "Number of points")->required()->check(CLI::PositiveNumber);
  add_output_options(disc2d, output, "csv");

  auto* vdc = app.add_subcommand("vdc", "LS-point set a la van der Corput of order N");
  vdc->add_option("--params", params_text, "L,S")->required();
  vdc->add_option("-N", count, "Number of points")->required()->check(CLI::PositiveNumber);
  vdc->add_option("--svg", svg_path, "Write a scatter plot");
  vdc->add_flag("--grid", svg_grid, "Overlay a 10x10 grid on the plot");
  add_output_options(vdc, output, "csv");

  auto* halton = app.add_subcommand("halton", "LS-sequence of points a la Halton");
  halton->add_option("--p1", p1_text, "L,S on the x axis")->required();
  halton->add_option("--p2", p2_text, "L,S on the y axis")->required();
  halton->add_option("-N", count, "Number of points")->required()->check(CLI::PositiveNumber);
  halton->add_option("--svg", svg_path, "Write a scatter plot");
  halton->add_flag("--grid", svg_grid, "Overlay a 10x10 grid on the plot");
  add_output_options(halton, output, "csv");

  auto* resonance = app.add_subcommand("resonance", "Search exact relations g1^p = g2^q");
  resonance->add_option("--p1", p1_text, "L,S")->required();
  resonance->add_option("--p2", p2_text, "L,S")->required();
  resonance->add_option("--max-exp", max_exp, "Largest exponent searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(resonance, resonance_output, "json");

  auto* scan = app.add_subcommand("scan", "Discrepancy growth over a grid of N (or levels)");
  auto* scan_params = scan->add_option("--params", params_text, "L,S");
  auto* scan_p1 = scan->add_option("--p1", p1_text, "L,S on the x axis (halton)");
  auto* scan_p2 = scan->add_option("--p2", p2_text, "L,S on the y axis (halton)");
  scan_params->excludes(scan_p1)->excludes(scan_p2);
  scan_p1->needs(scan_p2);
  scan_p2->needs(scan_p1);
  scan->add_option("--grid", grid_text, "Comma-separated N values (levels for partition)")->required();
  scan->add_option("--target", target, "partition, seq-star, seq-extreme, vdc or halton")
      ->check(CLI::IsMember({"partition", "seq-star", "seq-extreme", "vdc", "halton"}))
      ->capture_default_str();
  add_output_options(scan, output, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lsqmc: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      const LSParams params = parse_params(params_text);
      const auto indices = admissible_indices(params, count);
      const PointList1D pts = sequence_prefix(params, count);
      Table t{{"i", "index", "p", "q", "x"}, {}};
      for (std::size_t i = 0; i < count; ++i) {
        const QuadNum& x = pts.points()[i];
        t.rows.push_back({i + 1, indices[i], x.rational_part().get_str(), x.gamma_coeff().get_str(),
                          number(pts.shadow()[i])});
      }
      emit(output, t, json{{"command", "gen"}, {"params", params_json(params)}, {"N", count}}, out);
    } else if (partition->parsed()) {
      const LSParams params = parse_params(params_text);
      const LSPartition part = partition_at(params, level);
      Table t{{"i", "left_p", "left_q", "left", "len_exp", "length"}, {}};
      const auto powers = gamma_powers(params, static_cast<unsigned>(level + 1));
      std::vector<double> lengths;
      for (const QuadNum& p : powers) lengths.push_back(p.to_double());
      for (std::size_t i = 0; i < part.size(); ++i) {
        const Interval& iv = part.intervals()[i];
        t.rows.push_back({i + 1, iv.left.rational_part().get_str(), iv.left.gamma_coeff().get_str(),
                          number(iv.left.to_double()), iv.len_exp, number(lengths[iv.len_exp])});
      }
      emit(output, t,
           json{{"command", "partition"}, {"params", params_json(params)}, {"level", level},
                {"intervals", part.size()}},
           out);
    } else if (disc1d->parsed()) {
      const LSParams params = parse_params(params_text);
      const PointList1D pts = sequence_prefix(params, count);
      std::vector<DiscrepancyReport> reports;
      for (DiscrepancyKind k : {DiscrepancyKind::star, DiscrepancyKind::extreme}) {
        if (kind != "both" && kind != to_string(k)) continue;
        if (brute) {
          reports.push_back(brute_force_1d(pts, k));
        } else {
          reports.push_back(k == DiscrepancyKind::star ? star_disc_1d(pts) : extreme_disc_1d(pts));
        }
      }
      Table t{kReportColumns, {}};
      json list = json::array();
      for (const auto& r : reports) {
        t.rows.push_back(report_row(r));
        list.push_back(report_json(r));
      }
      if (output.format == "json") {
        emit_text(json{{"command", "disc1d"}, {"params", params_json(params)}, {"reports", list}}.dump(2) + "\n",
                  output.path, out);
      } else {
        emit(output, t, {}, out);
      }
    } else if (disc2d->parsed()) {
      std::optional<PointList2D> pts;
      json meta{{"command", "disc2d"}};
      if (!params_text.empty()) {
        const LSParams params = parse_params(params_text);
        pts = vdc_set(params, count);
        meta["construction"] = "vdc";
        meta["params"] = params_json(params);
      } else if (!p1_text.empty()) {
        const LSParams a = parse_params(p1_text);
        const LSParams b = parse_params(p2_text);
        pts = halton_pair(a, b, count);
        meta["construction"] = "halton";
        meta["p1"] = params_json(a);
        meta["p2"] = params_json(b);
      } else {
        throw UsageError("disc2d needs --params or --p1/--p2");
      }
      const DiscrepancyReport r = star_disc_2d(*pts);
      if (output.format == "json") {
        meta["report"] = report_json(r);
        emit_text(meta.dump(2) + "\n", output.path, out);
      } else {
        emit(output, Table{kReportColumns, {report_row(r)}}, {}, out);
      }
    } else if (vdc->parsed() || halton->parsed()) {
      const bool is_vdc = vdc->parsed();
      json meta{{"command", is_vdc ? "vdc" : "halton"}, {"N", count}};
      std::optional<PointList2D> pts;
      if (is_vdc) {
        const LSParams params = parse_params(params_text);
        pts = vdc_set(params, count);
        meta["params"] = params_json(params);
      } else {
        const LSParams a = parse_params(p1_text);
        const LSParams b = parse_params(p2_text);
        pts = halton_pair(a, b, count);
        meta["p1"] = params_json(a);
        meta["p2"] = params_json(b);
      }
      if (!svg_path.empty()) emit_text(render_svg(*pts, svg_grid), svg_path, out);
      if (svg_path.empty() || !output.path.empty()) emit(output, points_table(*pts), meta, out);
    } else if (resonance->parsed()) {
      const LSParams a = parse_params(p1_text);
      const LSParams b = parse_params(p2_text);
      const ResonanceResult r = detect_resonance(a, b, max_exp);
      const json relation = r.count_relation ? json(*r.count_relation) : json(nullptr);
      if (resonance_output.format == "json") {
        json j{{"related", r.related},
               {"p", r.p},
               {"q", r.q},
               {"field_match", r.field_match},
               {"count_relation", relation},
               {"count_checked_upto", r.count_checked_upto},
               {"p1", params_json(a)},
               {"p2", params_json(b)},
               {"squarefree_1", a.squarefree_part()},
               {"squarefree_2", b.squarefree_part()}};
        emit_text(j.dump(2) + "\n", resonance_output.path, out);
      } else {
        Table t{{"related", "p", "q", "field_match", "count_relation", "count_checked_upto"},
                {{r.related, r.p, r.q, r.field_match, relation, r.count_checked_upto}}};
        emit(resonance_output, t, {}, out);
      }
    } else if (scan->parsed()) {
      const ScanTarget scan_target = scan_target_from_string(target);
      const bool needs_pair = scan_target == ScanTarget::halton_star;
      if (needs_pair && p1_text.empty()) throw UsageError("scan --target halton needs --p1/--p2");
      if (!needs_pair && params_text.empty()) throw UsageError("scan needs --params");
      const LSParams first = parse_params(needs_pair ? p1_text : params_text);
      const LSParams second = needs_pair ? parse_params(p2_text) : first;
      const std::vector<std::size_t> grid = parse_grid(grid_text);
      const auto rows = run_scan(scan_target, first, second, grid);
      const bool with_level = scan_target == ScanTarget::partition_extreme;
      Table t;
      t.columns = {"N"};
      if (with_level) t.columns.push_back("level");
      for (const char* c : {"D", "ND", "ND_logN", "ND_log2N", "ND_pow"}) t.columns.emplace_back(c);
      for (const ScanRow& row : rows) {
        std::vector<json> cells{row.n};
        if (with_level) cells.emplace_back(row.level);
        for (double v : {row.d, row.nd, row.nd_log, row.nd_log2, row.nd_pow}) cells.push_back(number(v));
        t.rows.push_back(std::move(cells));
      }
      json meta{{"command", "scan"},
                {"target", target},
                {"params", params_json(first)},
                {"regime", to_string(regime(first))},
                {"one_minus_tau", number(one_minus_tau(first))}};
      if (needs_pair) meta["p2"] = params_json(second);
      emit(output, t, meta, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "lsqmc: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "lsqmc: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const UsageError& e) {
    err << "lsqmc: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace lsqmc::cli
