#include "hthresh/factorize.hpp"
#include "hthresh/obstructions.hpp"
#include "hthresh/threshold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hthresh;

namespace {

Digraph digraph_from_arcs(int k, const std::vector<std::pair<int, int>>& arcs) {
    Digraph h(k);
    for (auto [i, j] : arcs)
        h.add_arc(i - 1, j - 1); // 1-based classes, as in the file formats
    return h;
}

std::vector<std::pair<int, int>> digraph_arcs(const Digraph& h) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < h.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            if (h.arc(i, j))
                out.emplace_back(i + 1, j + 1);
    return out;
}

py::dict rep_to_dict(const ThresholdRepresentation& rep) {
    py::dict out;
    out["k"] = rep.h.order();
    out["arcs"] = digraph_arcs(rep.h);
    out["sequence"] = rep.sequence;
    return out;
}

} // namespace

PYBIND11_MODULE(_hthresh, m) {
    m.doc() = "H-product algebra on partitioned graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("edge_count", &Graph::edge_count)
        .def("complement", [](const Graph& g) { return complement(g); })
        .def("canonical_key",
             [](const Graph& g) { return py::bytes(canonical_key(g)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6=" + write_graph6(g) + ")";
        });

    py::class_<Digraph>(m, "Digraph")
        .def(py::init(&digraph_from_arcs), py::arg("k"), py::arg("arcs"))
        .def_property_readonly("order", &Digraph::order)
        .def("arc", [](const Digraph& h, int i, int j) { return h.arc(i - 1, j - 1); })
        .def("arcs", &digraph_arcs)
        .def("complement", [](const Digraph& h) { return complement_digraph(h); })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; });

    py::class_<PartitionedGraph>(m, "PartitionedGraph")
        .def(py::init<Graph, int, std::vector<int>>(), py::arg("graph"), py::arg("k"),
             py::arg("classes"))
        .def_property_readonly("graph", &PartitionedGraph::graph)
        .def_property_readonly("k", &PartitionedGraph::class_count)
        .def_property_readonly("classes", &PartitionedGraph::classes)
        .def_property_readonly("order", &PartitionedGraph::order)
        .def("canonical_key",
             [](const PartitionedGraph& t) { return py::bytes(canonical_key(t)); })
        .def("__eq__",
             [](const PartitionedGraph& a, const PartitionedGraph& b) { return a == b; });

    m.def("h_product", &h_product, py::arg("t"), py::arg("s"), py::arg("h"));
    m.def(
        "product_chain",
        [](const Digraph& h, const std::vector<PartitionedGraph>& factors) {
            FactorSequence seq{h, factors};
            seq.validate();
            return product_chain(seq);
        },
        py::arg("h"), py::arg("factors"));
    m.def("factors_commute", &factors_commute, py::arg("t"), py::arg("s"), py::arg("h"));

    m.def(
        "factorize",
        [](const PartitionedGraph& t, const Digraph& h) {
            return normalize(factorize(t, h)).factors;
        },
        py::arg("t"), py::arg("h"), "normalized unique H-decomposition");
    m.def("is_prime", &is_prime, py::arg("t"), py::arg("h"));

    m.def(
        "threshold_width",
        [](const Graph& g, int max_k) -> py::object {
            WidthResult r = threshold_width(g, max_k);
            if (!r.width)
                return py::none();
            py::dict out = rep_to_dict(*r.rep);
            out["width"] = *r.width;
            return out;
        },
        py::arg("g"), py::arg("max_k") = 3);
    m.def(
        "recognize_width2",
        [](const Graph& g) {
            Width2Result r = recognize_width2(g);
            py::dict out;
            out["width_class"] = r.width_class;
            out["route"] = r.route;
            out["witness"] = r.rep ? py::object(rep_to_dict(*r.rep)) : py::none();
            return out;
        },
        py::arg("g"));
    m.def(
        "is_h_threshold",
        [](const Graph& g, const Digraph& h) -> py::object {
            auto rep = is_h_threshold(g, h);
            return rep ? py::object(py::cast(rep->sequence)) : py::none();
        },
        py::arg("g"), py::arg("h"));
    m.def("is_threshold", &is_threshold, py::arg("g"));
    m.def("is_difference", &is_difference, py::arg("g"));
    m.def("expand_representation", &expand_representation, py::arg("h"), py::arg("sequence"));

    m.def(
        "contains_induced",
        [](const Graph& g, const Graph& pattern) -> py::object {
            auto emb = contains_induced(g, pattern);
            return emb ? py::object(py::cast(*emb)) : py::none();
        },
        py::arg("g"), py::arg("pattern"));
    m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"));
    m.def(
        "mine_minimal_obstructions",
        [](int max_n, int jobs) {
            py::list out;
            for (const auto& o : mine_minimal_obstructions(max_n, jobs)) {
                py::dict d;
                d["graph6"] = write_graph6(o.graph);
                d["name"] = o.name;
                d["order"] = o.graph.order();
                d["deleted_width_class"] = o.deleted_width_class;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("max_n") = 6, py::arg("jobs") = 1);
}
