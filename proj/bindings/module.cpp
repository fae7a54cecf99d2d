#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rpl/checks.hpp"
#include "rpl/series.hpp"
#include "rpl/stanley.hpp"
#include "rpl/stats.hpp"
#include "rpl/tcore.hpp"
#include "rpl/textio.hpp"

namespace py = pybind11;

namespace {

using Parts = std::vector<int>;

rpl::Partition make(const Parts& parts) { return rpl::Partition(parts); }

py::int_ to_py(const rpl::BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

rpl::NVector nvec(const std::vector<long long>& n) {
    return rpl::NVector{static_cast<int>(n.size()), n};
}

std::string type_name(rpl::TypeClass cls) {
    switch (cls) {
        case rpl::TypeClass::TypeA: return "A";
        case rpl::TypeClass::TypeB: return "B";
        case rpl::TypeClass::Other: return "other";
    }
    return "?";
}

rpl::OrbitVariant variant_from(const std::string& name) {
    if (name == "plain") return rpl::OrbitVariant::Plain;
    if (name == "srank") return rpl::OrbitVariant::SrankPreserving;
    throw std::invalid_argument("operator must be 'plain' or 'srank'");
}

py::dict report_dict(const rpl::CheckReport& rep) {
    py::dict out;
    out["check"] = rep.name;
    out["pass"] = rep.pass;
    out["params"] = rep.params;
    out["elapsed_seconds"] = rep.elapsed_seconds;
    if (rep.counterexample) {
        py::dict ce;
        ce["input"] = rep.counterexample->input;
        ce["expected"] = rep.counterexample->expected;
        ce["actual"] = rep.counterexample->actual;
        out["counterexample"] = ce;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_rpl, m) {
    m.doc() = "partition statistics, t-core bijections and q-series checks";

    // statistics
    m.def("weight", [](const Parts& p) { return make(p).weight(); });
    m.def("conjugate", [](const Parts& p) { return make(p).conjugate().parts(); });
    m.def("odd_parts", [](const Parts& p) { return rpl::odd_parts(make(p)); });
    m.def("srank", [](const Parts& p) { return rpl::srank(make(p)); });
    m.def("dyson_rank", [](const Parts& p) { return rpl::dyson_rank(make(p)); });
    m.def("ag_crank", [](const Parts& p) { return rpl::ag_crank(make(p)); });
    m.def("stcrank", [](const Parts& p) { return rpl::stcrank(make(p)); });
    m.def("five_core_crank", [](const Parts& p) { return rpl::five_core_crank(make(p)); });
    m.def("freq_token", [](const Parts& p) { return rpl::freq_token(make(p)); });

    // enumeration and counting
    m.def("partition_count", [](int n) { return to_py(rpl::partition_count(n)); });
    m.def("partitions", [](int n) {
        std::vector<Parts> out;
        rpl::for_each_partition(n, [&](const rpl::Partition& pi) { out.push_back(pi.parts()); });
        return out;
    });
    m.def(
        "residue_counts",
        [](int n, const std::string& statistic, int modulus) {
            py::dict out;
            for (auto& [r, c] :
                 rpl::residue_counts(n, rpl::statistic_from_name(statistic), modulus))
                out[py::int_(r)] = to_py(c);
            return out;
        },
        py::arg("n"), py::arg("statistic"), py::arg("modulus"));
    m.def("refined_counts", [](int n, int modulus) {
        py::dict out;
        for (auto& [key, c] : rpl::refined_counts(n, modulus))
            out[py::make_tuple(key.first, key.second)] = to_py(c);
        return out;
    });
    m.def("joint_odd_counts", [](int n) {
        py::dict out;
        for (auto& [key, c] : rpl::joint_odd_counts(n))
            out[py::make_tuple(key.first, key.second)] = to_py(c);
        return out;
    });

    // stcrank machinery
    m.def("bijection1", [](const Parts& p) {
        rpl::Bijection1Image img = rpl::bijection1(make(p));
        return py::make_tuple(img.pi1.parts(), img.pi2.parts());
    });
    m.def("bijection1_inverse", [](const Parts& pi1, const Parts& pi2) {
        return rpl::bijection1_inverse({make(pi1), make(pi2)}).parts();
    });
    m.def("classify", [](const Parts& p) { return type_name(rpl::classify(make(p))); });
    m.def("bijection2", [](const Parts& p) { return rpl::bijection2(make(p)).parts(); });
    m.def("bijection2_inverse",
          [](const Parts& p) { return rpl::bijection2_inverse(make(p)).parts(); });

    // t-cores
    m.def("is_t_core", [](const Parts& p, int t) { return rpl::is_t_core(make(p), t); });
    m.def("t_core_of", [](const Parts& p, int t) { return rpl::t_core_of(make(p), t).parts(); });
    m.def("residue_vector",
          [](const Parts& p, int t) { return rpl::residue_vector(make(p), t).r; });
    m.def("littlewood_decompose", [](const Parts& p, int t) {
        rpl::CoreQuotient cq = rpl::littlewood_decompose(make(p), t);
        std::vector<Parts> quotient;
        for (const rpl::Partition& q : cq.quotient) quotient.push_back(q.parts());
        return py::make_tuple(cq.core.parts(), quotient);
    });
    m.def("littlewood_compose", [](const Parts& core, const std::vector<Parts>& quotient) {
        rpl::CoreQuotient cq;
        cq.t = static_cast<int>(quotient.size());
        cq.core = make(core);
        for (const Parts& q : quotient) cq.quotient.push_back(make(q));
        return rpl::littlewood_compose(cq).parts();
    });
    m.def("phi2", [](const Parts& core, int t) { return rpl::phi2(make(core), t).n; });
    m.def("phi2_inverse",
          [](const std::vector<long long>& n) { return rpl::phi2_inverse(nvec(n)).parts(); });
    m.def("alpha_from_n", [](const std::vector<long long>& n) {
        rpl::AlphaVector av = rpl::alpha_from_n(nvec(n));
        return std::vector<long long>(av.a.begin(), av.a.end());
    });
    m.def("n_from_alpha", [](const std::vector<long long>& a) {
        if (a.size() != 5) throw std::invalid_argument("alpha vector must have 5 entries");
        rpl::AlphaVector av;
        std::copy(a.begin(), a.end(), av.a.begin());
        return rpl::n_from_alpha(av).n;
    });
    m.def("orbit_op", [](const Parts& p, const std::string& variant) {
        return rpl::orbit_op(make(p), variant_from(variant)).parts();
    }, py::arg("parts"), py::arg("variant") = "srank");
    m.def("orbit_rows", [](int n, const std::string& variant) {
        std::vector<std::vector<Parts>> rows;
        for (const auto& row : rpl::orbit_rows(n, variant_from(variant))) {
            std::vector<Parts> members;
            for (const rpl::Partition& pi : row) members.push_back(pi.parts());
            rows.push_back(std::move(members));
        }
        return rows;
    }, py::arg("n"), py::arg("variant") = "srank");
    m.def("theta_map", [](const Parts& p) { return rpl::theta_map(make(p)).parts(); });
    m.def("quadrupling_map",
          [](const Parts& p) { return rpl::quadrupling_map(make(p)).parts(); });
    m.def("five_cores_of", [](int n) {
        std::vector<Parts> out;
        for (const rpl::Partition& c : rpl::five_cores_of(n)) out.push_back(c.parts());
        return out;
    });
    m.def(
        "core_count",
        [](int n, int t, std::optional<int> crank, std::optional<int> srank_class) {
            return to_py(rpl::core_count(n, t, crank, srank_class));
        },
        py::arg("n"), py::arg("t") = 5, py::arg("crank") = std::nullopt,
        py::arg("srank_class") = std::nullopt);

    // verification catalog
    m.def("check_names", []() {
        std::vector<std::string> names;
        for (const rpl::CheckDef& def : rpl::check_catalog()) names.push_back(def.name);
        return names;
    });
    m.def(
        "run_check",
        [](const std::string& name, std::optional<int> max_n, std::optional<int> order) {
            rpl::CheckParams params;
            params.max_n = max_n;
            params.order = order;
            return report_dict(rpl::run_check(name, params));
        },
        py::arg("name"), py::arg("max_n") = std::nullopt, py::arg("order") = std::nullopt);

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
