#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>

#include "srcount/applications.hpp"
#include "srcount/oracle.hpp"
#include "srcount/src_index.hpp"

namespace py = pybind11;

namespace {

struct Alphabet {
    std::map<char, uint32_t> code;

    explicit Alphabet(std::initializer_list<std::string> texts) {
        for (const auto& t : texts)
            for (char b : t) code.emplace(b, 0);
        uint32_t next = 0;
        for (auto& [b, c] : code) c = next++;
    }
    uint32_t sigma() const { return static_cast<uint32_t>(code.size()); }
    std::vector<uint32_t> encode(const std::string& s) const {
        std::vector<uint32_t> out;
        for (char b : s) out.push_back(code.at(b));
        return out;
    }
    std::optional<std::vector<uint32_t>> encode_pattern(const std::string& s) const {
        std::vector<uint32_t> out;
        for (char b : s) {
            auto it = code.find(b);
            if (it == code.end()) return std::nullopt;
            out.push_back(it->second);
        }
        return out;
    }
};

// Python-facing wrapper over byte strings; positions and labels follow the
// 1-based conventions of the core library.
class PyIndex {
public:
    PyIndex(const std::string& text, const std::vector<uint64_t>& labels,
            std::optional<uint32_t> tau)
        : alpha_({text}), idx_(make(text, labels, tau, alpha_)) {}

    uint64_t count(const std::string& pattern, uint64_t a, uint64_t b) const {
        auto enc = alpha_.encode_pattern(pattern);
        if (!enc) {
            if (pattern.empty()) throw py::value_error("pattern must be non-empty");
            return 0;
        }
        return idx_.count(*enc, a, b);
    }

    bool is_empty(const std::string& pattern, uint64_t a, uint64_t b) const {
        return count(pattern, a, b) == 0;
    }

    std::optional<uint32_t> report_one(const std::string& pattern, uint64_t a,
                                       uint64_t b) const {
        auto enc = alpha_.encode_pattern(pattern);
        if (!enc) return std::nullopt;
        return idx_.report_one(*enc, a, b);
    }

    uint32_t tau() const { return idx_.tau(); }

private:
    static srcount::SrcIndex make(const std::string& text,
                                  const std::vector<uint64_t>& labels,
                                  std::optional<uint32_t> tau,
                                  const Alphabet& alpha) {
        srcount::LabeledText lt;
        lt.text = alpha.encode(text);
        lt.labels = labels;
        lt.sigma = alpha.sigma();
        lt.universe = 0;
        for (uint64_t l : labels) lt.universe = std::max(lt.universe, l);
        srcount::BuildConfig cfg;
        cfg.tau = tau;
        return srcount::SrcIndex(std::move(lt), cfg);
    }

    Alphabet alpha_;
    srcount::SrcIndex idx_;
};

}  // namespace

PYBIND11_MODULE(_srcount, m) {
    m.doc() = "substring range counting over labeled texts";

    py::class_<PyIndex>(m, "Index")
        .def(py::init<const std::string&, const std::vector<uint64_t>&,
                      std::optional<uint32_t>>(),
             py::arg("text"), py::arg("labels"), py::arg("tau") = std::nullopt)
        .def("count", &PyIndex::count, py::arg("pattern"), py::arg("a"),
             py::arg("b"))
        .def("is_empty", &PyIndex::is_empty, py::arg("pattern"), py::arg("a"),
             py::arg("b"))
        .def("report_one", &PyIndex::report_one, py::arg("pattern"),
             py::arg("a"), py::arg("b"))
        .def_property_readonly("tau", &PyIndex::tau);

    m.def(
        "prsc_count",
        [](const std::string& text, const std::string& pattern, uint32_t i,
           uint32_t j) -> uint64_t {
            Alphabet alpha({text});
            auto enc = alpha.encode_pattern(pattern);
            if (!enc) return 0;
            return prsc_count(srcount::prsc_build(alpha.encode(text), alpha.sigma()),
                              *enc, i, j);
        },
        py::arg("text"), py::arg("pattern"), py::arg("i"), py::arg("j"),
        "occurrences of pattern starting in positions [i, j] (1-based)");

    m.def(
        "intervals_count",
        [](const std::string& text,
           const std::vector<std::pair<uint32_t, uint32_t>>& intervals,
           const std::string& pattern, uint32_t i, uint32_t j) -> uint64_t {
            Alphabet alpha({text});
            auto enc = alpha.encode_pattern(pattern);
            if (!enc) return 0;
            srcount::IntervalSet pi;
            pi.intervals = intervals;
            return intervals_count(
                srcount::intervals_build(alpha.encode(text), alpha.sigma(), pi),
                *enc, i, j);
        },
        py::arg("text"), py::arg("intervals"), py::arg("pattern"), py::arg("i"),
        py::arg("j"));

    m.def(
        "gaps_count",
        [](const std::string& text, uint32_t d, const std::string& p1,
           const std::string& p2) -> uint64_t {
            Alphabet alpha({text});
            auto e1 = alpha.encode_pattern(p1), e2 = alpha.encode_pattern(p2);
            if (!e1 || !e2) return 0;
            return srcount::GappedIndex(alpha.encode(text), alpha.sigma(), d)
                .count(*e1, *e2);
        },
        py::arg("text"), py::arg("d"), py::arg("p1"), py::arg("p2"),
        "positions where p1 occurs, then d characters, then p2");

    m.def(
        "aligned_count",
        [](const std::string& s1, const std::string& s2, const std::string& p1,
           const std::string& p2) -> uint64_t {
            Alphabet alpha({s1, s2});
            auto e1 = alpha.encode_pattern(p1), e2 = alpha.encode_pattern(p2);
            if (!e1 || !e2) return 0;
            return srcount::AlignedIndex(alpha.encode(s1), alpha.encode(s2),
                                         alpha.sigma())
                .count(*e1, *e2);
        },
        py::arg("s1"), py::arg("s2"), py::arg("p1"), py::arg("p2"),
        "positions where p1 occurs in s1 and p2 occurs in s2 at the same spot");
}
