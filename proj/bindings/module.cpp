/*
 * Python bindings. Matrices cross the boundary as a thin handle class;
 * structured results (partitions, kernels, reports, certificates) cross as
 * plain Python dicts/lists mirroring the JSON wire format, with exact
 * scalars encoded as strings.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simkern/analyze.hpp"

namespace py = pybind11;
using namespace simkern;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(py::handle h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json out = Json::array();
        for (py::handle item : h) out.push_back(py_to_json(item));
        return out;
    }
    if (py::isinstance<py::dict>(h)) {
        Json out = Json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    throw ParseError("cannot convert Python object to JSON: " +
                     py::repr(h).cast<std::string>());
}

Partition blocks_to_partition(std::size_t n, const py::object& blocks) {
    Json j{{"n", n}, {"blocks", py_to_json(blocks)}};
    return partition_from_json(j);
}

class PyMatrix {
public:
    explicit PyMatrix(AnyMatrix m) : m_(std::move(m)) {}

    static PyMatrix from_json(const py::object& payload) {
        if (py::isinstance<py::str>(payload))
            return PyMatrix(matrix_from_text(payload.cast<std::string>()));
        return PyMatrix(matrix_from_json(py_to_json(payload)));
    }

    const AnyMatrix& raw() const { return m_; }

    py::object to_json() const { return json_to_py(matrix_to_json(m_)); }

    std::size_t rows() const {
        return std::visit([](const auto& m) { return m.rows(); }, m_);
    }
    std::size_t cols() const {
        return std::visit([](const auto& m) { return m.cols(); }, m_);
    }
    std::string domain() const {
        return std::visit(
            [](const auto& m) -> std::string {
                using T = typename std::decay_t<decltype(m)>::value_type;
                return scalar_traits<T>::domain_name;
            },
            m_);
    }

    std::string repr() const {
        return "Matrix(" + domain() + ", " + std::to_string(rows()) + "x" +
               std::to_string(cols()) + ")";
    }

    bool equals(const PyMatrix& other) const {
        if (m_.index() != other.m_.index()) return false;
        return std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                return m == std::get<M>(other.m_);
            },
            m_);
    }

    template <typename Fn>
    auto on_hermitian(Fn&& fn) const {
        return std::visit(
            [&](const auto& m) {
                using T = typename std::decay_t<decltype(m)>::value_type;
                if constexpr (std::is_same_v<T, PrimeFieldElement>) {
                    throw UnsupportedDomainError(
                        "this operation needs an ordered complex-capable domain, not GF(p)");
                    // unreachable; keeps the return type deducible
                    return fn(HermitianMatrix<GaussianRational>(
                        Matrix<GaussianRational>(1, 1, GaussianRational(0))));
                } else {
                    return fn(HermitianMatrix<T>(m));
                }
            },
            m_);
    }

private:
    AnyMatrix m_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact stratification, principal-minor positivity, and simultaneous "
              "Hadamard-power kernels of Hermitian matrices";

    static py::exception<Error> exc(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<PyMatrix>(m, "Matrix")
        .def_static("from_json", &PyMatrix::from_json, py::arg("payload"),
                    "build a matrix from a JSON dict/string or CSV text")
        .def("to_json", &PyMatrix::to_json)
        .def_property_readonly("rows", &PyMatrix::rows)
        .def_property_readonly("cols", &PyMatrix::cols)
        .def_property_readonly("domain", &PyMatrix::domain)
        .def("__repr__", &PyMatrix::repr)
        .def("__eq__", &PyMatrix::equals, py::is_operator());

    m.def("hadamard_power", [](const PyMatrix& a, unsigned long n) {
        return PyMatrix(std::visit(
            [&](const auto& mm) -> AnyMatrix { return hadamard_power(mm, n); }, a.raw()));
    });

    m.def("rank", [](const PyMatrix& a) {
        return std::visit([](const auto& mm) { return rank(mm); }, a.raw());
    });

    m.def("principal_minor", [](const PyMatrix& a, std::vector<std::size_t> idx_1based) {
        for (auto& i : idx_1based) {
            if (i == 0) throw ParseError("index sets are 1-based");
            --i;
        }
        return a.on_hermitian([&](const auto& h) {
            return json_to_py(scalar_to_json(principal_minor(h, idx_1based)));
        });
    });

    m.def("signature", [](const PyMatrix& a) {
        return a.on_hermitian([](const auto& h) {
            Signature s = signature(h);
            return py::make_tuple(s.n_plus, s.n_zero, s.n_minus);
        });
    });

    m.def("pmp_order", [](const PyMatrix& a) {
        return a.on_hermitian([](const auto& h) { return pmp_order(h); });
    });

    m.def("is_k_pmp", [](const PyMatrix& a, std::size_t k) {
        return a.on_hermitian(
            [&](const auto& h) { return json_to_py(pmp_verdict_to_json(is_k_pmp(h, k))); });
    });

    m.def("is_k_psrp", [](const PyMatrix& a, std::size_t k) {
        return a.on_hermitian(
            [&](const auto& h) { return json_to_py(pmp_verdict_to_json(is_k_psrp(h, k))); });
    });

    m.def("check_pmp_signature", [](const PyMatrix& a) {
        return a.on_hermitian([](const auto& h) {
            PmpSignatureReport r = check_pmp_signature(h);
            return json_to_py(Json{{"k", r.k},
                                   {"signature", signature_to_json(r.sig)},
                                   {"consistent", r.consistent}});
        });
    });

    m.def(
        "pi_min",
        [](const PyMatrix& a, const std::string& group) {
            return a.on_hermitian([&](const auto& h) {
                return json_to_py(partition_to_json(pi_min(h, GroupSpec::parse(group)))["blocks"]);
            });
        },
        py::arg("matrix"), py::arg("group") = "trivial");

    m.def(
        "pi_stratum",
        [](const PyMatrix& a, const std::string& group) {
            return a.on_hermitian([&](const auto& h) {
                return json_to_py(
                    partition_to_json(pi_stratum(h, GroupSpec::parse(group)))["blocks"]);
            });
        },
        py::arg("matrix"), py::arg("group") = "trivial");

    m.def(
        "stratum_report",
        [](const PyMatrix& a, const std::string& group) {
            return a.on_hermitian([&](const auto& h) {
                GroupSpec g = GroupSpec::parse(group);
                return json_to_py(
                    stratum_report_to_json(rank_one_certificates(h, pi_stratum(h, g), g)));
            });
        },
        py::arg("matrix"), py::arg("group") = "trivial");

    m.def(
        "rank_one_certificates",
        [](const PyMatrix& a, const py::object& blocks, const py::object& group) {
            return a.on_hermitian([&](const auto& h) {
                std::optional<GroupSpec> g;
                if (!group.is_none()) g = GroupSpec::parse(group.cast<std::string>());
                Partition p = blocks_to_partition(h.dim(), blocks);
                return json_to_py(stratum_report_to_json(rank_one_certificates(h, p, g)));
            });
        },
        py::arg("matrix"), py::arg("blocks"), py::arg("group") = py::none());

    m.def("compression", [](const PyMatrix& a, const py::object& blocks) {
        return a.on_hermitian([&](const auto& h) {
            return PyMatrix(AnyMatrix(compression(h, blocks_to_partition(h.dim(), blocks)).mat()));
        });
    });

    m.def("hns_decompose", [](const PyMatrix& a) {
        return a.on_hermitian(
            [](const auto& h) { return json_to_py(hns_to_json(hns_decompose(h))); });
    });

    m.def("simultaneous_kernel", [](const PyMatrix& a) {
        return a.on_hermitian(
            [](const auto& h) { return json_to_py(kernel_to_json(simultaneous_kernel(h))); });
    });

    m.def("ker_block_ones", [](std::size_t n, const py::object& blocks) {
        return json_to_py(kernel_to_json(ker_block_ones(blocks_to_partition(n, blocks))));
    });

    m.def("positive_combination_kernel", [](const PyMatrix& a, const py::list& coeffs) {
        std::vector<Rational> c;
        for (py::handle item : coeffs) {
            if (py::isinstance<py::int_>(item))
                c.emplace_back(item.cast<long long>());
            else
                c.push_back(Rational::from_string(item.cast<std::string>()));
        }
        return a.on_hermitian([&](const auto& h) {
            return json_to_py(kernel_to_json(positive_combination_kernel(h, c)));
        });
    });

    m.def("rectangular_simultaneous_kernel", [](const PyMatrix& a) {
        return std::visit(
            [](const auto& mm) {
                auto rk = rectangular_simultaneous_kernel(mm);
                return json_to_py(
                    Json{{"column_partition", partition_to_json(rk.column_partition)["blocks"]},
                         {"kernel", kernel_to_json(rk.kernel)},
                         {"kernel_equals_block_sum_zero", rk.equals_block_sum_zero}});
            },
            a.raw());
    });

    m.def("distinct_diagonal_check", [](const PyMatrix& a) {
        return std::visit(
            [](const auto& mm) {
                auto r = distinct_diagonal_check(mm);
                return json_to_py(Json{{"hypothesis_holds", r.hypothesis_holds},
                                       {"kernel", kernel_to_json(r.kernel)}});
            },
            a.raw());
    });

    m.def("verify_t3pmp", [](const PyMatrix& a) {
        return a.on_hermitian(
            [](const auto& h) { return json_to_py(t3pmp_report_to_json(verify_t3pmp(h))); });
    });

    m.def(
        "analyze",
        [](const PyMatrix& a, const std::string& group) {
            return json_to_py(analyze_matrix(a.raw(), GroupSpec::parse(group)));
        },
        py::arg("matrix"), py::arg("group") = "trivial");

    m.def(
        "theorem_battery",
        [](const PyMatrix& a, const std::string& suite) {
            BatteryResult r = theorem_battery(a.raw(), suite);
            Json checks = Json::array();
            for (const auto& line : r.checks) checks.push_back(line);
            return json_to_py(Json{{"ok", r.ok}, {"checks", checks}, {"witness", r.witness}});
        },
        py::arg("matrix"), py::arg("suite") = "");

    m.def(
        "generate",
        [](const std::string& family, const py::dict& params, std::uint64_t seed) {
            std::map<std::string, std::string> p;
            for (auto item : params)
                p[item.first.cast<std::string>()] = py::str(item.second).cast<std::string>();
            GeneratedAny gen = generate_family(family, p, seed);
            py::dict out;
            out["matrix"] = PyMatrix(std::move(gen.matrix));
            out["certificate"] = json_to_py(certificate_to_json(gen.certificate));
            out["epsilon"] =
                gen.epsilon ? py::object(py::str(gen.epsilon->to_string())) : py::none();
            return out;
        },
        py::arg("family"), py::arg("params") = py::dict(), py::arg("seed") = 0);

    m.def(
        "set_tolerance", [](double tau) { float_policy().tau = tau; },
        "zero tolerance for the float domain");

    m.attr("__version__") = "0.1.0";
}
