#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

#include "cocontact/dynamics.hpp"
#include "cocontact/errors.hpp"
#include "cocontact/geometry.hpp"
#include "cocontact/hamiltonian.hpp"
#include "cocontact/integrators.hpp"
#include "cocontact/lagrangian.hpp"
#include "cocontact/suspension.hpp"
#include "cocontact/systems.hpp"

namespace py = pybind11;
using namespace cocontact;

namespace {

std::span<const double> as_span(const Eigen::VectorXd& x) {
  return {x.data(), static_cast<size_t>(x.size())};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cocontact geometry, field equations and integrators";

  py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
  py::register_exception<NumericDomainError>(m, "NumericDomainError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);
  py::register_exception<RegularityError>(m, "RegularityError", PyExc_RuntimeError);
  py::register_exception<InversionError>(m, "InversionError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::enum_<Side>(m, "Side")
      .value("lagrangian", Side::Lagrangian)
      .value("hamiltonian", Side::Hamiltonian);

  py::enum_<Boundary>(m, "Boundary")
      .value("periodic", Boundary::Periodic)
      .value("fixed_ends", Boundary::FixedEnds);

  py::class_<Signature>(m, "Signature")
      .def(py::init([](int k, int n) { return Signature{k, n}; }), py::arg("k"), py::arg("n"))
      .def_readwrite("k", &Signature::k)
      .def_readwrite("n", &Signature::n)
      .def("dim", &Signature::dim)
      .def("contact_dim", &Signature::contact_dim)
      .def("idx_t", &Signature::idx_t)
      .def("idx_q", &Signature::idx_q)
      .def("idx_fiber", &Signature::idx_fiber)
      .def("idx_z", &Signature::idx_z)
      .def(py::self == py::self)
      .def("__repr__", [](const Signature& s) {
        return "Signature(k=" + std::to_string(s.k) + ", n=" + std::to_string(s.n) + ")";
      });

  py::class_<PhaseFrame>(m, "PhaseFrame")
      .def_static("make", &PhaseFrame::make, py::arg("sig"), py::arg("side"))
      .def_readonly("sig", &PhaseFrame::sig)
      .def_readonly("side", &PhaseFrame::side)
      .def_readonly("names", &PhaseFrame::names)
      .def_readonly("aliases", &PhaseFrame::aliases);

  py::class_<PhasePoint>(m, "PhasePoint")
      .def_static("zero", &PhasePoint::zero)
      .def_static("from_flat", &PhasePoint::from_flat)
      .def_readwrite("sig", &PhasePoint::sig)
      .def_readwrite("t", &PhasePoint::t)
      .def_readwrite("q", &PhasePoint::q)
      .def_readwrite("fiber", &PhasePoint::fiber)
      .def_readwrite("z", &PhasePoint::z)
      .def("flat", &PhasePoint::flat);

  py::class_<ContactPoint>(m, "ContactPoint")
      .def_static("zero", &ContactPoint::zero)
      .def_static("from_flat", &ContactPoint::from_flat)
      .def_readwrite("sig", &ContactPoint::sig)
      .def_readwrite("q", &ContactPoint::q)
      .def_readwrite("fiber", &ContactPoint::fiber)
      .def_readwrite("z", &ContactPoint::z)
      .def("flat", &ContactPoint::flat)
      .def("attach", &ContactPoint::attach, py::arg("t"));

  m.def("detach", &detach);

  py::class_<SampleRanges>(m, "SampleRanges")
      .def(py::init<>())
      .def_readwrite("fallback", &SampleRanges::fallback)
      .def_readwrite("per_name", &SampleRanges::per_name);

  py::class_<SampleStream>(m, "SampleStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("unit", &SampleStream::unit)
      .def("in_range", &SampleStream::in, py::arg("lo"), py::arg("hi"));

  m.def("sample_points", &sample_points, py::arg("frame"), py::arg("count"), py::arg("seed"),
        py::arg("ranges") = SampleRanges{},
        "Deterministic point draws; the sequence is part of the reproducibility contract.");
  m.def("sample_contact_points", &sample_contact_points, py::arg("frame"), py::arg("count"),
        py::arg("seed"), py::arg("ranges") = SampleRanges{});

  py::class_<Derivative1>(m, "Derivative1")
      .def_readonly("value", &Derivative1::value)
      .def_readonly("gradient", &Derivative1::gradient);

  py::class_<Derivative2>(m, "Derivative2")
      .def_readonly("value", &Derivative2::value)
      .def_readonly("gradient", &Derivative2::gradient)
      .def_readonly("hessian", &Derivative2::hessian);

  py::class_<ScalarField>(m, "ScalarField")
      .def_static("parse", &ScalarField::parse, py::arg("text"), py::arg("vars"),
                  py::arg("aliases") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("vars", &ScalarField::vars)
      .def("arity", &ScalarField::arity)
      .def("var_index", &ScalarField::var_index)
      .def("eval",
           [](const ScalarField& f, const Eigen::VectorXd& x) { return f.eval(as_span(x)); })
      .def("eval_grad",
           [](const ScalarField& f, const Eigen::VectorXd& x) { return f.eval_grad(as_span(x)); })
      .def("eval_hess",
           [](const ScalarField& f, const Eigen::VectorXd& x) { return f.eval_hess(as_span(x)); })
      .def("__repr__", [](const ScalarField& f) {
        return "ScalarField(" + (f.valid() ? to_string(f.expr(), f.vars()) : std::string("empty")) +
               ")";
      });

  m.def("embed", &embed, py::arg("f"), py::arg("target_vars"));
  m.def(
      "fd_check",
      [](const ScalarField& f, const Eigen::VectorXd& x, double step) {
        return fd_check(f, as_span(x), step);
      },
      py::arg("f"), py::arg("x"), py::arg("step") = 1e-5,
      "Max relative gap between the propagated gradient and central differences.");
  m.def(
      "fd_check_hessian",
      [](const ScalarField& f, const Eigen::VectorXd& x, double step) {
        return fd_check_hessian(f, as_span(x), step);
      },
      py::arg("f"), py::arg("x"), py::arg("step") = 1e-4);

  // pointwise linear algebra of forms

  py::class_<CovectorAtPoint>(m, "Covector")
      .def_static("zero", &CovectorAtPoint::zero)
      .def_static("basis", &CovectorAtPoint::basis)
      .def_readwrite("c", &CovectorAtPoint::c);

  py::class_<VectorAtPoint>(m, "Vector")
      .def_static("zero", &VectorAtPoint::zero)
      .def_static("basis", &VectorAtPoint::basis)
      .def_readwrite("v", &VectorAtPoint::v);

  py::class_<TwoFormAtPoint>(m, "TwoForm")
      .def_static("zero", &TwoFormAtPoint::zero)
      .def_readwrite("m", &TwoFormAtPoint::m)
      .def("add_wedge", &TwoFormAtPoint::add_wedge, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("contract1", &contract1);
  m.def("contract2", &contract2);

  py::class_<RankResult>(m, "RankResult")
      .def_readonly("rank", &RankResult::rank)
      .def_readonly("singular_values", &RankResult::singular_values)
      .def_readonly("kernel", &RankResult::kernel);

  m.def("rank_of", &rank_of, py::arg("rows"), py::arg("tol") = 1e-10);

  py::class_<CocontactFrameAtPoint>(m, "CocontactFrame")
      .def_readonly("k", &CocontactFrameAtPoint::k)
      .def_readonly("dim", &CocontactFrameAtPoint::dim)
      .def_readonly("tau", &CocontactFrameAtPoint::tau)
      .def_readonly("eta", &CocontactFrameAtPoint::eta)
      .def_readonly("deta", &CocontactFrameAtPoint::deta);

  py::class_<ConditionCheck>(m, "ConditionCheck")
      .def_readonly("name", &ConditionCheck::name)
      .def_readonly("computed", &ConditionCheck::computed)
      .def_readonly("expected", &ConditionCheck::expected)
      .def_readonly("passed", &ConditionCheck::pass);

  py::class_<PointAxiomReport>(m, "PointAxiomReport")
      .def_readonly("index", &PointAxiomReport::index)
      .def_readonly("conditions", &PointAxiomReport::conditions)
      .def_readonly("passed", &PointAxiomReport::pass);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("tol", &AxiomReport::tol)
      .def_readonly("points", &AxiomReport::points)
      .def_readonly("failures", &AxiomReport::failures)
      .def_readonly("all_pass", &AxiomReport::all_pass)
      .def("to_json", &AxiomReport::to_json);

  m.def("verify_axioms", &verify_axioms, py::arg("structure"), py::arg("points"),
        py::arg("tol") = 1e-10,
        "Rank conditions of the structure at each point; structure maps a point to its frame.");
  m.def("check_frame_axioms", &check_frame_axioms, py::arg("frame"), py::arg("tol") = 1e-10);

  py::class_<ReebFields>(m, "ReebFields")
      .def_readonly("rt", &ReebFields::rt)
      .def_readonly("rz", &ReebFields::rz);

  m.def("solve_reeb", &solve_reeb, py::arg("frame"), py::arg("residual_tol") = 1e-9);
  m.def("canonical_frame", &canonical_frame, py::arg("sig"), py::arg("x"));

  // velocity side

  py::class_<LagrangianSystem>(m, "LagrangianSystem")
      .def_readonly("sig", &LagrangianSystem::sig)
      .def_readonly("frame", &LagrangianSystem::frame)
      .def_readonly("L", &LagrangianSystem::L)
      .def_readonly("holonomic", &LagrangianSystem::holonomic)
      .def_readonly("base", &LagrangianSystem::base)
      .def_readonly("damping", &LagrangianSystem::damping)
      .def("eval", &LagrangianSystem::eval);

  m.def("make_lagrangian", &make_lagrangian, py::arg("sig"), py::arg("L"));
  m.def("assemble_holonomic", &assemble_holonomic, py::arg("sig"), py::arg("base"),
        py::arg("damping"),
        "base over parameters, configuration and velocities; damping over parameters, "
        "configuration and action coordinates.");

  m.def("energy", &energy);
  m.def("base_energy", &base_energy);
  m.def("damping_value", &damping_value);
  m.def("energy_differential", &energy_differential);

  py::class_<CartanForms>(m, "CartanForms")
      .def_readonly("theta", &CartanForms::theta)
      .def_readonly("eta", &CartanForms::eta)
      .def_readonly("deta", &CartanForms::deta);

  m.def("cartan_contact_forms", &cartan_contact_forms);
  m.def("lagrangian_frame", &lagrangian_frame);

  py::class_<HessianBlock>(m, "HessianBlock")
      .def_readonly("W", &HessianBlock::W)
      .def_readonly("Winv", &HessianBlock::Winv)
      .def_readonly("cond", &HessianBlock::cond)
      .def_readonly("regular", &HessianBlock::regular);

  m.def("hessian", &hessian, py::arg("sys"), py::arg("x"), py::arg("cond_limit") = 1e12);
  m.def("legendre", &legendre);
  m.def("legendre_inverse", &legendre_inverse, py::arg("sys"), py::arg("y"), py::arg("guess"),
        py::arg("tol") = 1e-10, py::arg("max_iter") = 50);
  m.def("reeb_closed_form", &reeb_closed_form);

  // momentum side

  py::class_<HamiltonianSystem>(m, "HamiltonianSystem")
      .def_readonly("sig", &HamiltonianSystem::sig)
      .def_readonly("frame", &HamiltonianSystem::frame)
      .def_readonly("h", &HamiltonianSystem::h)
      .def("eval", &HamiltonianSystem::eval)
      .def("grad", &HamiltonianSystem::grad);

  m.def("make_hamiltonian", &make_hamiltonian, py::arg("sig"), py::arg("h"));

  py::class_<KVectorCoeffs>(m, "KVectorCoeffs")
      .def_static("zero", &KVectorCoeffs::zero)
      .def_static("from_legs", &KVectorCoeffs::from_legs)
      .def_readwrite("sig", &KVectorCoeffs::sig)
      .def_readwrite("A", &KVectorCoeffs::A)
      .def_readwrite("B", &KVectorCoeffs::B)
      .def_readwrite("C", &KVectorCoeffs::C)
      .def_readwrite("D", &KVectorCoeffs::D)
      .def("leg", &KVectorCoeffs::leg);

  py::class_<HdwDetermined>(m, "HdwDetermined")
      .def_readonly("A", &HdwDetermined::A)
      .def_readonly("B", &HdwDetermined::B)
      .def_readonly("traceC", &HdwDetermined::traceC)
      .def_readonly("traceD", &HdwDetermined::traceD);

  m.def("hdw_determined", &hdw_determined);
  m.def("canonical_kvector",
        py::overload_cast<const HamiltonianSystem&, const PhasePoint&>(&canonical_kvector),
        "Determined field-equation parts completed with the uniform-trace gauge.");
  m.def("canonical_kvector",
        py::overload_cast<const LagrangianSystem&, const PhasePoint&>(&canonical_kvector));
  m.def("solve_kvector", &solve_kvector, py::arg("sig"), py::arg("frame"), py::arg("reeb"),
        py::arg("h_val"), py::arg("dh"));

  py::class_<KvResidualReport>(m, "KvResidualReport")
      .def_readonly("form_eq", &KvResidualReport::form_eq)
      .def_readonly("contact_eq", &KvResidualReport::contact_eq)
      .def_readonly("param_eq", &KvResidualReport::param_eq)
      .def("max", &KvResidualReport::max)
      .def("passes", &KvResidualReport::pass, py::arg("tol"));

  m.def("kvector_residuals", &kvector_residuals, py::arg("frame"), py::arg("reeb"),
        py::arg("h_val"), py::arg("dh"), py::arg("X"));
  m.def("verify_kvector",
        py::overload_cast<const HamiltonianSystem&, const KVectorCoeffs&, const PhasePoint&>(
            &verify_kvector));
  m.def("verify_kvector",
        py::overload_cast<const LagrangianSystem&, const KVectorCoeffs&, const PhasePoint&>(
            &verify_kvector));
  m.def("h_from_lagrangian", &h_from_lagrangian, py::arg("sys"), py::arg("y"), py::arg("guess"));
  m.def("lie_reformulation_residual", &lie_reformulation_residual, py::arg("sys"), py::arg("x"),
        py::arg("step") = 1e-5);

  // sections over parameter grids

  py::class_<GridAxes>(m, "GridAxes")
      .def(py::init([](int k, std::vector<int> nodes, std::vector<double> origin,
                       std::vector<double> h) {
             return GridAxes{k, std::move(nodes), std::move(origin), std::move(h)};
           }),
           py::arg("k"), py::arg("nodes"), py::arg("origin"), py::arg("h"))
      .def_readwrite("k", &GridAxes::k)
      .def_readwrite("nodes", &GridAxes::nodes)
      .def_readwrite("origin", &GridAxes::origin)
      .def_readwrite("h", &GridAxes::h)
      .def("total", &GridAxes::total);

  py::class_<GridSection>(m, "GridSection")
      .def_static("allocate", &GridSection::allocate)
      .def_static("sample", &GridSection::sample, py::arg("sig"), py::arg("side"), py::arg("axes"),
                  py::arg("psi"), "psi maps grid coordinates to a point; parameter block ignored.")
      .def_readonly("sig", &GridSection::sig)
      .def_readonly("side", &GridSection::side)
      .def_readonly("contact_level", &GridSection::contact_level)
      .def_readonly("axes", &GridSection::axes)
      .def_readwrite("q", &GridSection::q)
      .def_readwrite("fiber", &GridSection::fiber)
      .def_readwrite("z", &GridSection::z)
      .def("point_at", &GridSection::point_at)
      .def("params_at", &GridSection::params_at);

  py::class_<ProlongedSection>(m, "ProlongedSection")
      .def_readonly("s", &ProlongedSection::s)
      .def_readonly("dq", &ProlongedSection::dq)
      .def_readonly("dfiber", &ProlongedSection::dfiber)
      .def_readonly("dz", &ProlongedSection::dz);

  m.def("prolong", &prolong);
  m.def("sopde_residual", &sopde_residual, py::arg("X"), py::arg("x"),
        "Max gap between the configuration legs and the fiber coordinates.");

  py::class_<ElResidual>(m, "ElResidual")
      .def_readonly("param_eq", &ElResidual::param_eq)
      .def_readonly("config_eq", &ElResidual::config_eq)
      .def_readonly("action_eq", &ElResidual::action_eq)
      .def_readonly("holonomy_gap", &ElResidual::holonomy_gap)
      .def("max_eq", &ElResidual::max_eq);

  py::class_<HdwResidual>(m, "HdwResidual")
      .def_readonly("param_eq", &HdwResidual::param_eq)
      .def_readonly("config_eq", &HdwResidual::config_eq)
      .def_readonly("momentum_eq", &HdwResidual::momentum_eq)
      .def_readonly("action_eq", &HdwResidual::action_eq)
      .def("max_eq", &HdwResidual::max_eq);

  py::class_<ResidualSummary>(m, "ResidualSummary")
      .def_readonly("interior_nodes", &ResidualSummary::interior_nodes)
      .def_readonly("max_param", &ResidualSummary::max_param)
      .def_readonly("max_config", &ResidualSummary::max_config)
      .def_readonly("max_momentum", &ResidualSummary::max_momentum)
      .def_readonly("max_action", &ResidualSummary::max_action)
      .def_readonly("max_holonomy", &ResidualSummary::max_holonomy)
      .def("max_eq", &ResidualSummary::max_eq);

  m.def("el_residual", &el_residual, py::arg("sys"), py::arg("ps"), py::arg("idx"));
  m.def("hdw_residual", &hdw_residual, py::arg("sys"), py::arg("ps"), py::arg("idx"));
  m.def("el_residual_summary", &el_residual_summary);
  m.def("hdw_residual_summary", &hdw_residual_summary);

  // parameter-free reduction and suspension

  py::class_<KContactSystem>(m, "KContactSystem")
      .def_readonly("sig", &KContactSystem::sig)
      .def_readonly("frame", &KContactSystem::frame)
      .def_readonly("h", &KContactSystem::h)
      .def("attach", &KContactSystem::attach)
      .def("eval", &KContactSystem::eval)
      .def("grad", &KContactSystem::grad);

  m.def("autonomy_defect", &autonomy_defect);
  m.def("is_autonomous", &is_autonomous, py::arg("sys"), py::arg("samples"),
        py::arg("tol") = 1e-12);
  m.def("reduce_autonomous", &reduce_autonomous, py::arg("sys"), py::arg("samples"),
        py::arg("tol") = 1e-12);

  py::class_<ContactKVectorCoeffs>(m, "ContactKVectorCoeffs")
      .def_readwrite("sig", &ContactKVectorCoeffs::sig)
      .def_readwrite("B", &ContactKVectorCoeffs::B)
      .def_readwrite("C", &ContactKVectorCoeffs::C)
      .def_readwrite("D", &ContactKVectorCoeffs::D);

  m.def("contact_canonical_kvector", &contact_canonical_kvector);
  m.def("suspend", &suspend, "Re-attaches parameter directions with identity drift.");

  py::class_<ContactKvResidualReport>(m, "ContactKvResidualReport")
      .def_readonly("form_eq", &ContactKvResidualReport::form_eq)
      .def_readonly("contact_eq", &ContactKvResidualReport::contact_eq)
      .def("max_eq", &ContactKvResidualReport::max_eq);

  m.def("kcontact_residual", &kcontact_residual);
  m.def("kcontact_section_residual", &kcontact_section_residual, py::arg("sys"), py::arg("ps"),
        py::arg("idx"));
  m.def("kcontact_section_summary", &kcontact_section_summary);
  m.def("drop_parameters", &drop_parameters);
  m.def("attach_parameters", &attach_parameters);

  py::class_<SectionRoundtrip>(m, "SectionRoundtrip")
      .def_readonly("dropped", &SectionRoundtrip::dropped)
      .def_readonly("reattached", &SectionRoundtrip::reattached)
      .def_readonly("bitwise_equal", &SectionRoundtrip::bitwise_equal);

  m.def("roundtrip_sections", &roundtrip_sections);

  // time stepping

  py::class_<OdeTrajectory>(m, "OdeTrajectory")
      .def_readonly("sig", &OdeTrajectory::sig)
      .def_readonly("t", &OdeTrajectory::t)
      .def_readonly("q", &OdeTrajectory::q)
      .def_readonly("p", &OdeTrajectory::p)
      .def_readonly("z", &OdeTrajectory::z)
      .def_readonly("dt", &OdeTrajectory::dt)
      .def_readonly("dt_store", &OdeTrajectory::dt_store)
      .def("point_at", &OdeTrajectory::point_at);

  m.def("integrate_k1", &integrate_k1, py::arg("sys"), py::arg("x0"), py::arg("duration"),
        py::arg("dt"), py::arg("save_every") = 1);

  py::class_<OdeDiagnostics>(m, "OdeDiagnostics")
      .def_readonly("h", &OdeDiagnostics::h)
      .def_readonly("z_residual", &OdeDiagnostics::z_residual)
      .def_readonly("max_z_residual", &OdeDiagnostics::max_z_residual);

  m.def("ode_diagnostics", &ode_diagnostics);
  m.def("ode_section", &ode_section);

  py::class_<WaveConfig>(m, "WaveConfig")
      .def(py::init<>())
      .def_readwrite("f", &WaveConfig::f)
      .def_readwrite("g", &WaveConfig::g)
      .def_readwrite("gamma", &WaveConfig::gamma)
      .def_readwrite("u0", &WaveConfig::u0)
      .def_readwrite("v0", &WaveConfig::v0)
      .def_readwrite("nx", &WaveConfig::nx)
      .def_readwrite("x0", &WaveConfig::x0)
      .def_readwrite("x1", &WaveConfig::x1)
      .def_readwrite("boundary", &WaveConfig::boundary)
      .def_readwrite("t0", &WaveConfig::t0)
      .def_readwrite("duration", &WaveConfig::duration)
      .def_readwrite("dt", &WaveConfig::dt)
      .def_readwrite("cfl", &WaveConfig::cfl)
      .def_readwrite("save_every", &WaveConfig::save_every);

  py::class_<WaveTrajectory>(m, "WaveTrajectory")
      .def_readonly("cfg", &WaveTrajectory::cfg)
      .def_readonly("x", &WaveTrajectory::x)
      .def_readonly("dx", &WaveTrajectory::dx)
      .def_readonly("t", &WaveTrajectory::t)
      .def_readonly("u", &WaveTrajectory::u)
      .def_readonly("w", &WaveTrajectory::w)
      .def_readonly("ux", &WaveTrajectory::ux)
      .def_readonly("zt", &WaveTrajectory::zt)
      .def_readonly("dt", &WaveTrajectory::dt)
      .def_readonly("dt_store", &WaveTrajectory::dt_store);

  m.def("integrate_wave", &integrate_wave,
        "Method of lines with fourth-order time stepping; see WaveConfig for the knobs.");

  py::class_<WaveDiagnostics>(m, "WaveDiagnostics")
      .def_readonly("energy", &WaveDiagnostics::energy)
      .def_readonly("diss_rate", &WaveDiagnostics::diss_rate)
      .def_readonly("dissipation", &WaveDiagnostics::dissipation)
      .def_readonly("balance", &WaveDiagnostics::balance)
      .def_readonly("max_balance_rel", &WaveDiagnostics::max_balance_rel)
      .def_readonly("z_residual", &WaveDiagnostics::z_residual)
      .def_readonly("max_z_residual", &WaveDiagnostics::max_z_residual)
      .def_readonly("energy_nonincreasing", &WaveDiagnostics::energy_nonincreasing);

  m.def("wave_diagnostics", &wave_diagnostics);
  m.def("wave_section", &wave_section, py::arg("traj"), py::arg("side"));
  m.def("wave_final_error", &wave_final_error, py::arg("traj"), py::arg("u_ref"));

  py::class_<ConvergenceLevel>(m, "ConvergenceLevel")
      .def_readonly("h", &ConvergenceLevel::h)
      .def_readonly("error", &ConvergenceLevel::error)
      .def_readonly("z_residual", &ConvergenceLevel::z_residual);

  py::class_<ConvergenceTable>(m, "ConvergenceTable")
      .def_readonly("levels", &ConvergenceTable::levels)
      .def_readonly("error_order", &ConvergenceTable::error_order)
      .def_readonly("z_residual_order", &ConvergenceTable::z_residual_order)
      .def_readonly("error_monotone", &ConvergenceTable::error_monotone)
      .def("csv", &ConvergenceTable::csv);

  m.def("convergence_wave", &convergence_wave, py::arg("cfg"), py::arg("levels"),
        py::arg("u_ref"));
  m.def("convergence_k1", &convergence_k1, py::arg("sys"), py::arg("x0"), py::arg("duration"),
        py::arg("dt0"), py::arg("levels"), py::arg("q_ref"));

  // shipped model families

  m.def("wave_lagrangian", &wave_lagrangian, py::arg("f"), py::arg("g"), py::arg("gamma"));
  m.def("wave_hamiltonian", &wave_hamiltonian, py::arg("g"), py::arg("gamma"));
  m.def("oscillator_hamiltonian", &oscillator_hamiltonian, py::arg("omega"), py::arg("gamma"),
        py::arg("forcing"));

  py::class_<OscillatorReference>(m, "OscillatorReference")
      .def(py::init([](double omega, double gamma, double nu) {
             return OscillatorReference{omega, gamma, nu};
           }),
           py::arg("omega"), py::arg("gamma"), py::arg("nu"))
      .def_readwrite("omega", &OscillatorReference::omega)
      .def_readwrite("gamma", &OscillatorReference::gamma)
      .def_readwrite("nu", &OscillatorReference::nu)
      .def("q", &OscillatorReference::q)
      .def("v", &OscillatorReference::v);
}
