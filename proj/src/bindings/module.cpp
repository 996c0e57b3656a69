#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holobraid/braid.hpp"
#include "holobraid/curve.hpp"
#include "holobraid/fourier.hpp"
#include "holobraid/garside.hpp"
#include "holobraid/holonomic.hpp"
#include "holobraid/legendrian.hpp"
#include "holobraid/svg.hpp"

namespace py = pybind11;
using namespace holobraid;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid-group algebra (Garside normal and summit forms), holonomic "
            "N|P rewriting with isotopy certificates, and numerical analysis of "
            "holonomic / Legendrian Fourier parametrizations.";

  // --- errors ---------------------------------------------------------------
  auto base = py::register_exception<Error>(m, "HolobraidError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<StrandMismatchError>(m, "StrandMismatchError", base);
  py::register_exception<CapExceededError>(m, "CapExceededError", base);
  py::register_exception<IllegalMoveError>(m, "IllegalMoveError", base);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base);
  py::register_exception<NoSeparatingPointError>(m, "NoSeparatingPointError", base);

  // --- braid core -------------------------------------------------------------
  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<>())
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__len__", &BraidWord::size)
      .def("all_positive", &BraidWord::all_positive)
      .def("all_negative", &BraidWord::all_negative)
      .def(py::self == py::self)
      .def("__str__", &serialize_word)
      .def("__repr__",
           [](const BraidWord& w) { return "BraidWord('" + serialize_word(w) + "')"; });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<>())
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity)
      .def_static("reversal", &Permutation::reversal)
      .def_readonly("images", &Permutation::images)
      .def("__len__", &Permutation::size)
      .def("is_identity", &Permutation::is_identity)
      .def("is_reversal", &Permutation::is_reversal)
      .def("inverse", &Permutation::inverse)
      .def_static("compose", &Permutation::compose)
      .def("inversions", &Permutation::inversions)
      .def(py::self == py::self);

  py::class_<PermutationBraid>(m, "PermutationBraid")
      .def(py::init<Permutation>(), py::arg("perm"))
      .def_readonly("perm", &PermutationBraid::perm)
      .def_readonly("word", &PermutationBraid::word)
      .def(py::self == py::self);

  m.def("compose", &compose);
  m.def("invert", &invert);
  m.def("free_reduce", &free_reduce);
  m.def("permutation_of", &permutation_of);
  m.def("exponent_sum", &exponent_sum);
  m.def("delta", &delta, py::arg("n"));
  m.def("is_delta_fragment", &is_delta_fragment);
  m.def("permutation_braid_word", &permutation_braid_word);
  m.def("positive_equivalent", &positive_equivalent, py::arg("p1"), py::arg("p2"),
        py::arg("cap") = 1000000);
  m.def("serialize_word", &serialize_word);
  m.def("parse_word", &parse_word);

  // --- garside ------------------------------------------------------------------
  py::class_<NormalForm>(m, "NormalForm")
      .def(py::init<>())
      .def_readonly("strands", &NormalForm::strands)
      .def_readonly("inf", &NormalForm::inf)
      .def_readonly("factors", &NormalForm::factors)
      .def("canonical_length", &NormalForm::canonical_length)
      .def(py::self == py::self)
      .def("__str__", &serialize_normal_form)
      .def("__repr__", [](const NormalForm& nf) {
        return "NormalForm('" + serialize_normal_form(nf) + "')";
      });

  py::class_<ConjugationWitness>(m, "ConjugationWitness")
      .def_readonly("steps", &ConjugationWitness::steps)
      .def("word", &ConjugationWitness::word, py::arg("strands"));

  py::class_<SummitResult>(m, "SummitResult")
      .def_readonly("form", &SummitResult::form)
      .def_readonly("witness", &SummitResult::witness);

  py::class_<GarsideConfig>(m, "GarsideConfig")
      .def(py::init<>())
      .def_readwrite("strand_cap", &GarsideConfig::strand_cap);

  m.def("tau", py::overload_cast<const BraidWord&>(&tau));
  m.def("tau_perm", py::overload_cast<const Permutation&>(&tau));
  m.def("negative_split", &negative_split, py::arg("i"), py::arg("n"));
  m.def("delta_power_split", &delta_power_split);
  m.def("left_normal_form", &left_normal_form);
  m.def("to_word", &to_word);
  m.def("words_equal", &words_equal);
  m.def("cycling", &cycling);
  m.def("decycling", &decycling);
  m.def("summit_form", &summit_form);
  m.def("summit_set", &summit_set, py::arg("w"), py::arg("config") = GarsideConfig{});
  m.def("conjugate_test", &conjugate_test, py::arg("w1"), py::arg("w2"),
        py::arg("config") = GarsideConfig{});
  m.def("serialize_normal_form", &serialize_normal_form);
  m.def("parse_normal_form", &parse_normal_form, py::arg("text"), py::arg("strands"));

  // --- holonomic -------------------------------------------------------------------
  py::class_<HolonomicForm>(m, "HolonomicForm")
      .def(py::init<>())
      .def(py::init([](int n, std::vector<int> neg, std::vector<int> pos) {
             return make_holonomic(n, std::move(neg), std::move(pos));
           }),
           py::arg("strands"), py::arg("negative"), py::arg("positive"))
      .def_readonly("strands", &HolonomicForm::strands)
      .def_readonly("negative_part", &HolonomicForm::negative_part)
      .def_readonly("positive_part", &HolonomicForm::positive_part)
      .def(py::self == py::self)
      .def("__str__", &serialize_holonomic)
      .def("__repr__", [](const HolonomicForm& h) {
        return "HolonomicForm('" + serialize_holonomic(h) + "')";
      });

  py::enum_<MoveTag>(m, "MoveTag")
      .value("V3a", MoveTag::V3a)
      .value("V3b", MoveTag::V3b)
      .value("V3c", MoveTag::V3c)
      .value("M1", MoveTag::M1)
      .value("M2", MoveTag::M2)
      .value("ConjPos", MoveTag::ConjPos);

  py::class_<CertStep>(m, "CertStep")
      .def_readonly("tag", &CertStep::tag)
      .def_readonly("part", &CertStep::part)
      .def_readonly("iface", &CertStep::iface)
      .def_readonly("sign", &CertStep::sign)
      .def_readonly("conj", &CertStep::conj)
      .def_readonly("result", &CertStep::result);

  py::class_<IsotopyCertificate>(m, "IsotopyCertificate")
      .def(py::init<>())
      .def(py::init<HolonomicForm>(), py::arg("start"))
      .def_readonly("start", &IsotopyCertificate::start)
      .def_readonly("steps", &IsotopyCertificate::steps)
      .def("final_form", &IsotopyCertificate::final_form)
      .def("__len__", [](const IsotopyCertificate& c) { return c.steps.size(); })
      .def("__str__", &serialize_certificate);

  py::class_<VerifyResult>(m, "VerifyResult")
      .def_readonly("ok", &VerifyResult::ok)
      .def_readonly("failed_step", &VerifyResult::failed_step)
      .def_readonly("reason", &VerifyResult::reason)
      .def("__bool__", [](const VerifyResult& r) { return r.ok; });

  m.def("validate_holonomic", &validate);
  m.def("open_word", &open_word);
  m.def("conjugate_positive", &conjugate_positive);
  m.def("verify_certificate", &verify_certificate);
  m.def("holonomize", &holonomize);
  m.def(
      "comb_to_delta_power",
      [](const HolonomicForm& h, IsotopyCertificate* cert) {
        return comb_to_delta_power(h, cert);
      },
      py::arg("h"), py::arg("cert") = nullptr);
  m.def(
      "holonomic_normal_form",
      [](const HolonomicForm& h, IsotopyCertificate* cert) {
        return holonomic_normal_form(h, cert);
      },
      py::arg("h"), py::arg("cert") = nullptr);
  m.def("holonomic_summit", &holonomic_summit);
  m.def(
      "markov_stabilize",
      [](const HolonomicForm& h, int sign, IsotopyCertificate* cert) {
        return markov_stabilize(h, sign, cert);
      },
      py::arg("h"), py::arg("sign"), py::arg("cert") = nullptr);
  m.def(
      "markov_destabilize",
      [](const HolonomicForm& h, IsotopyCertificate* cert) {
        return markov_destabilize(h, cert);
      },
      py::arg("h"), py::arg("cert") = nullptr);
  m.def("serialize_certificate", &serialize_certificate);
  m.def("parse_certificate", &parse_certificate);
  m.def("serialize_holonomic", &serialize_holonomic);
  m.def("parse_holonomic", &parse_holonomic);

  py::enum_<MarkovScriptOp::Kind>(m, "MarkovOpKind")
      .value("Stabilize", MarkovScriptOp::Kind::Stabilize)
      .value("Destabilize", MarkovScriptOp::Kind::Destabilize)
      .value("Conjugate", MarkovScriptOp::Kind::Conjugate)
      .value("Summit", MarkovScriptOp::Kind::Summit);
  py::class_<MarkovScriptOp>(m, "MarkovScriptOp")
      .def(py::init([](MarkovScriptOp::Kind kind, int sign, const BraidWord& conj) {
             MarkovScriptOp op;
             op.kind = kind;
             op.sign = sign;
             op.conj = conj;
             return op;
           }),
           py::arg("kind"), py::arg("sign") = 1, py::arg("conj") = BraidWord());
  m.def("replay_markov_script", &replay_markov_script);

  // --- fourier / curve engine --------------------------------------------------------
  py::class_<FourierSeries>(m, "FourierSeries")
      .def(py::init<>())
      .def(py::init([](double constant, std::vector<double> sin, std::vector<double> cos) {
             FourierSeries f;
             f.constant = constant;
             f.sin_coeffs = std::move(sin);
             f.cos_coeffs = std::move(cos);
             return f;
           }),
           py::arg("constant") = 0.0, py::arg("sin") = std::vector<double>{},
           py::arg("cos") = std::vector<double>{})
      .def_readwrite("constant", &FourierSeries::constant)
      .def_readwrite("sin_coeffs", &FourierSeries::sin_coeffs)
      .def_readwrite("cos_coeffs", &FourierSeries::cos_coeffs)
      .def("__call__", &FourierSeries::eval, py::arg("t"))
      .def("eval", &FourierSeries::eval, py::arg("t"))
      .def("derivative", &FourierSeries::derivative)
      .def("degree", &FourierSeries::degree)
      .def(py::self == py::self);
  m.def("parse_fourier", &parse_fourier);
  m.def("serialize_fourier", &serialize_fourier);

  py::class_<CurveConfig>(m, "CurveConfig")
      .def(py::init<>())
      .def_readwrite("samples", &CurveConfig::samples)
      .def_readwrite("root_tol", &CurveConfig::root_tol)
      .def_readwrite("match_tol", &CurveConfig::match_tol)
      .def_readwrite("dedupe_tol", &CurveConfig::dedupe_tol)
      .def_readwrite("axis_tol", &CurveConfig::axis_tol)
      .def_readwrite("cluster_tol", &CurveConfig::cluster_tol);

  py::class_<Jet3>(m, "Jet3")
      .def_readonly("x", &Jet3::x)
      .def_readonly("y", &Jet3::y)
      .def_readonly("z", &Jet3::z)
      .def_readonly("dx", &Jet3::dx)
      .def_readonly("dy", &Jet3::dy)
      .def_readonly("dz", &Jet3::dz);

  py::enum_<DerivOrder>(m, "DerivOrder")
      .value("F", DerivOrder::F)
      .value("F1", DerivOrder::F1)
      .value("F2", DerivOrder::F2);

  py::class_<DoublePoint>(m, "DoublePoint")
      .def_readonly("t1", &DoublePoint::t1)
      .def_readonly("t2", &DoublePoint::t2)
      .def_readonly("x", &DoublePoint::x)
      .def_readonly("y", &DoublePoint::y)
      .def_readonly("sign", &DoublePoint::sign)
      .def_readonly("upper", &DoublePoint::upper);

  py::class_<DoublePointScan>(m, "DoublePointScan")
      .def_readonly("points", &DoublePointScan::points)
      .def_readonly("diagnostics", &DoublePointScan::diagnostics);

  py::class_<ConditionResult>(m, "ConditionResult")
      .def_readonly("pass_", &ConditionResult::pass)
      .def_readonly("detail", &ConditionResult::detail)
      .def("__bool__", [](const ConditionResult& c) { return c.pass; });

  py::class_<GenericityReport>(m, "GenericityReport")
      .def_readonly("embedded", &GenericityReport::embedded)
      .def_readonly("off_axis", &GenericityReport::off_axis)
      .def_readonly("no_triple", &GenericityReport::no_triple)
      .def_readonly("zero_balance", &GenericityReport::zero_balance)
      .def_readonly("zeros_f", &GenericityReport::zeros_f)
      .def_readonly("zeros_fprime", &GenericityReport::zeros_fprime)
      .def_readonly("braid_index", &GenericityReport::braid_index)
      .def_readonly("points", &GenericityReport::points)
      .def_readonly("diagnostics", &GenericityReport::diagnostics)
      .def("all_pass", &GenericityReport::all_pass);

  m.def("eval_jet", &eval_jet, py::arg("f"), py::arg("t"));
  m.def("zeros_on_cycle", &zeros_on_cycle, py::arg("f"), py::arg("which"),
        py::arg("config") = CurveConfig{});
  m.def("double_points", &double_points, py::arg("f"), py::arg("config") = CurveConfig{});
  m.def("crossing_sign", &crossing_sign, py::arg("f"), py::arg("dp"),
        py::arg("config") = CurveConfig{});
  m.def("genericity_report", &genericity_report, py::arg("f"),
        py::arg("config") = CurveConfig{});
  m.def("braid_axis_point", &braid_axis_point, py::arg("f"),
        py::arg("config") = CurveConfig{});
  m.def("extract_braid", &extract_braid, py::arg("f"), py::arg("config") = CurveConfig{});
  m.def("curve_csv", &curve_csv, py::arg("f"), py::arg("samples") = 1024);

  // --- legendrian -----------------------------------------------------------------
  py::class_<CousinParams>(m, "CousinParams")
      .def(py::init([](int k, const FourierSeries& base) {
             CousinParams p;
             p.k = k;
             p.base = base;
             return p;
           }),
           py::arg("k"), py::arg("base"))
      .def_readwrite("k", &CousinParams::k)
      .def_readwrite("base", &CousinParams::base);

  py::class_<CousinJet>(m, "CousinJet")
      .def_readonly("x", &CousinJet::x)
      .def_readonly("v", &CousinJet::v)
      .def_readonly("z", &CousinJet::z)
      .def_readonly("dx", &CousinJet::dx)
      .def_readonly("dv", &CousinJet::dv)
      .def_readonly("dz", &CousinJet::dz);

  py::class_<TangentSample>(m, "TangentSample")
      .def(py::init([](double x, double w, double z, double dx, double dw) {
             return TangentSample{x, w, z, dx, dw};
           }),
           py::arg("x"), py::arg("w"), py::arg("z"), py::arg("dx"), py::arg("dw"))
      .def_readwrite("x", &TangentSample::x)
      .def_readwrite("w", &TangentSample::w)
      .def_readwrite("z", &TangentSample::z)
      .def_readwrite("dx", &TangentSample::dx)
      .def_readwrite("dw", &TangentSample::dw);

  py::enum_<ContactForm>(m, "ContactForm")
      .value("Alpha", ContactForm::Alpha)
      .value("Beta", ContactForm::Beta);

  py::class_<FrontCrossing>(m, "FrontCrossing")
      .def_readonly("t1", &FrontCrossing::t1)
      .def_readonly("t2", &FrontCrossing::t2)
      .def_readonly("x", &FrontCrossing::x)
      .def_readonly("v", &FrontCrossing::v)
      .def_readonly("sign", &FrontCrossing::sign);

  py::class_<FrontDiagram>(m, "FrontDiagram")
      .def_readonly("crossings", &FrontDiagram::crossings)
      .def_readonly("cusps", &FrontDiagram::cusps);

  py::class_<FrontBranch>(m, "FrontBranch")
      .def(py::init([](double z, double dx, double dv) {
             return FrontBranch{z, dx, dv};
           }),
           py::arg("z"), py::arg("dx"), py::arg("dv"))
      .def_readwrite("z", &FrontBranch::z)
      .def_readwrite("dx", &FrontBranch::dx)
      .def_readwrite("dv", &FrontBranch::dv);

  py::class_<Point3>(m, "Point3")
      .def(py::init([](double x, double y, double z) { return Point3{x, y, z}; }),
           py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &Point3::x)
      .def_readwrite("y", &Point3::y)
      .def_readwrite("z", &Point3::z);

  m.def("cousin_jet", &cousin_jet, py::arg("params"), py::arg("t"));
  m.def(
      "tangency_residual",
      [](const std::vector<TangentSample>& samples, ContactForm form, double y_floor) {
        return tangency_residual(samples, form, y_floor);
      },
      py::arg("samples"), py::arg("form"), py::arg("y_floor") = 1e-9);
  m.def("sample_cousin", &sample_cousin, py::arg("params"), py::arg("samples"));
  m.def("sample_holonomic", &sample_holonomic, py::arg("f"), py::arg("samples"));
  m.def("front_diagram", &front_diagram, py::arg("params"),
        py::arg("config") = CurveConfig{});
  m.def("front_crossing_sign", &front_crossing_sign, py::arg("b1"), py::arg("b2"),
        py::arg("slope_tol") = 1e-6);
  m.def("half_space_map", &half_space_map);
  m.def("dasbach_isotopy_jet", &dasbach_isotopy_jet, py::arg("f"), py::arg("k"),
        py::arg("m"), py::arg("s"), py::arg("t"), py::arg("verbatim") = false);
  m.def("sample_dasbach", &sample_dasbach, py::arg("f"), py::arg("k"), py::arg("m"),
        py::arg("s"), py::arg("samples"), py::arg("verbatim") = false);

  // --- svg ---------------------------------------------------------------------
  py::class_<SvgOptions>(m, "SvgOptions")
      .def(py::init<>())
      .def_readwrite("samples", &SvgOptions::samples)
      .def_readwrite("width", &SvgOptions::width)
      .def_readwrite("margin", &SvgOptions::margin)
      .def_readwrite("stroke", &SvgOptions::stroke)
      .def_readwrite("gap", &SvgOptions::gap);
  m.def("render_projection_svg", &render_projection_svg, py::arg("f"),
        py::arg("config") = CurveConfig{}, py::arg("options") = SvgOptions{});
  m.def("render_front_svg", &render_front_svg, py::arg("params"),
        py::arg("config") = CurveConfig{}, py::arg("options") = SvgOptions{});
}
