#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsqmc/discrepancy.hpp"
#include "lsqmc/errors.hpp"
#include "lsqmc/partition.hpp"
#include "lsqmc/scan.hpp"
#include "lsqmc/sequence.hpp"
#include "lsqmc/square.hpp"

namespace py = pybind11;
using namespace lsqmc;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

LSParams params_of(const Pair& p) { return make_params(p.first, p.second); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.get_str());
}

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::tuple exact(const QuadNum& x) { return py::make_tuple(to_fraction(x.rational_part()), to_fraction(x.gamma_coeff())); }

py::dict box_dict(const Box& b) {
  py::dict d;
  d["x_lo"] = b.x_lo;
  d["x_hi"] = b.x_hi;
  d["y_lo"] = b.y_lo;
  d["y_hi"] = b.y_hi;
  d["count"] = b.count;
  return d;
}

py::dict report_dict(const DiscrepancyReport& r) {
  py::dict d;
  d["N"] = r.n;
  d["value"] = r.value;
  d["kind"] = to_string(r.kind);
  d["method"] = to_string(r.method);
  d["dimension"] = r.dimension;
  d["witness"] = box_dict(r.witness);
  return d;
}

PointList1D rational_points(const std::vector<Pair>& fractions) {
  std::vector<Rational> xs;
  for (const auto& [num, den] : fractions) {
    if (den <= 0) throw std::invalid_argument("denominators must be positive");
    Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    xs.push_back(r);
  }
  return PointList1D::from_rationals(xs);
}

std::vector<std::pair<double, double>> coordinates(const PointList2D& pts) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(pts.point(i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "LS-sequences of points: exact generation, discrepancy and resonance";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def(
      "params_info",
      [](Pair p) {
        const LSParams params = params_of(p);
        py::dict d;
        d["L"] = params.long_count();
        d["S"] = params.short_count();
        d["gamma"] = params.gamma_float();
        d["disc"] = params.disc();
        d["squarefree_part"] = params.squarefree_part();
        d["rational_gamma"] = params.rational_gamma();
        d["regime"] = to_string(regime(params));
        d["one_minus_tau"] = one_minus_tau(params);
        return d;
      },
      py::arg("params"));

  m.def(
      "counts", [](Pair p, int n) {
        py::list out;
        for (const BigInt& v : counts(params_of(p), n).values) out.append(to_int(v));
        return out;
      },
      py::arg("params"), py::arg("n"), "Interval counts t_0..t_n.");

  m.def(
      "partition",
      [](Pair p, int n) {
        const LSPartition part = partition_at(params_of(p), n);
        py::list out;
        for (const Interval& iv : part.intervals()) {
          out.append(py::make_tuple(iv.left.to_double(), iv.len_exp, exact(iv.left)));
        }
        return out;
      },
      py::arg("params"), py::arg("n"),
      "Intervals of level n as (left, len_exp, (p, q)) with left = p + q*gamma.");

  m.def("is_admissible", [](Pair p, std::uint64_t n) { return is_admissible(params_of(p), n); },
        py::arg("params"), py::arg("n"));
  m.def("admissible_indices", [](Pair p, std::size_t count) { return admissible_indices(params_of(p), count); },
        py::arg("params"), py::arg("count"));
  m.def("phi", [](Pair p, std::uint64_t n) { return exact(phi(params_of(p), n)); }, py::arg("params"),
        py::arg("n"), "Exact (p, q) with phi(n) = p + q*gamma.");

  m.def("sequence", [](Pair p, std::size_t count) { return sequence_prefix(params_of(p), count).shadow(); },
        py::arg("params"), py::arg("count"));
  m.def(
      "sequence_exact",
      [](Pair p, std::size_t count) {
        const PointList1D pts = sequence_prefix(params_of(p), count);
        py::list out;
        for (const QuadNum& x : pts.points()) out.append(exact(x));
        return out;
      },
      py::arg("params"), py::arg("count"));

  m.def(
      "disc1d",
      [](Pair p, std::size_t count, const std::string& kind, bool brute_force) {
        const PointList1D pts = sequence_prefix(params_of(p), count);
        if (kind != "star" && kind != "extreme") throw std::invalid_argument("kind must be star or extreme");
        const DiscrepancyKind k = kind == "star" ? DiscrepancyKind::star : DiscrepancyKind::extreme;
        if (brute_force) return report_dict(brute_force_1d(pts, k));
        return report_dict(k == DiscrepancyKind::star ? star_disc_1d(pts) : extreme_disc_1d(pts));
      },
      py::arg("params"), py::arg("count"), py::arg("kind") = "star", py::arg("brute_force") = false,
      "Discrepancy of the first `count` sequence points.");

  m.def(
      "disc1d_rational",
      [](const std::vector<Pair>& fractions, const std::string& kind, bool brute_force) {
        const PointList1D pts = rational_points(fractions);
        if (kind != "star" && kind != "extreme") throw std::invalid_argument("kind must be star or extreme");
        const DiscrepancyKind k = kind == "star" ? DiscrepancyKind::star : DiscrepancyKind::extreme;
        if (brute_force) return report_dict(brute_force_1d(pts, k));
        return report_dict(k == DiscrepancyKind::star ? star_disc_1d(pts) : extreme_disc_1d(pts));
      },
      py::arg("points"), py::arg("kind") = "star", py::arg("brute_force") = false,
      "Discrepancy of exact rational points given as (numerator, denominator) pairs.");

  m.def("vdc", [](Pair p, std::size_t count) { return coordinates(vdc_set(params_of(p), count)); },
        py::arg("params"), py::arg("count"));
  m.def(
      "halton",
      [](Pair a, Pair b, std::size_t count) { return coordinates(halton_pair(params_of(a), params_of(b), count)); },
      py::arg("p1"), py::arg("p2"), py::arg("count"));

  m.def("disc2d_vdc", [](Pair p, std::size_t count) { return report_dict(star_disc_2d(vdc_set(params_of(p), count))); },
        py::arg("params"), py::arg("count"));
  m.def(
      "disc2d_halton",
      [](Pair a, Pair b, std::size_t count) {
        return report_dict(star_disc_2d(halton_pair(params_of(a), params_of(b), count)));
      },
      py::arg("p1"), py::arg("p2"), py::arg("count"));
  m.def(
      "disc2d_rational",
      [](const std::vector<Pair>& xs, const std::vector<Pair>& ys) {
        return report_dict(star_disc_2d(PointList2D(Construction::generic, rational_points(xs), rational_points(ys))));
      },
      py::arg("xs"), py::arg("ys"));

  m.def(
      "resonance",
      [](Pair a, Pair b, int max_exp) {
        const ResonanceResult r = detect_resonance(params_of(a), params_of(b), max_exp);
        py::dict d;
        d["related"] = r.related;
        d["p"] = r.p;
        d["q"] = r.q;
        d["field_match"] = r.field_match;
        d["count_relation"] = r.count_relation ? py::object(py::int_(*r.count_relation)) : py::object(py::none());
        d["count_checked_upto"] = r.count_checked_upto;
        return d;
      },
      py::arg("p1"), py::arg("p2"), py::arg("max_exp") = 12);

  m.def(
      "scan",
      [](const std::string& target, Pair p, const std::vector<std::size_t>& grid, std::optional<Pair> second) {
        const LSParams first = params_of(p);
        const ScanTarget t = scan_target_from_string(target);
        if (t == ScanTarget::halton_star && !second) throw std::invalid_argument("halton scan needs `second`");
        const LSParams other = second ? params_of(*second) : first;
        py::list out;
        for (const ScanRow& row : run_scan(t, first, other, grid)) {
          py::dict d;
          d["N"] = row.n;
          if (t == ScanTarget::partition_extreme) d["level"] = row.level;
          d["D"] = row.d;
          d["ND"] = row.nd;
          d["ND_logN"] = row.nd_log;
          d["ND_log2N"] = row.nd_log2;
          d["ND_pow"] = row.nd_pow;
          out.append(d);
        }
        return out;
      },
      py::arg("target"), py::arg("params"), py::arg("grid"), py::arg("second") = py::none());
}
