#include "qitineq/json_io.hpp"

#include <sstream>

namespace qitineq {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json re_row = json::array(), im_row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
                {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    try {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        if (re.size() != rows || im.size() != rows)
            throw ParseError("matrix JSON: row count mismatch");
        ComplexMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (re[i].size() != cols || im[i].size() != cols)
                throw ParseError("matrix JSON: column count mismatch");
            for (std::size_t jj = 0; jj < cols; ++jj)
                m(i, jj) = cplx(re[i][jj].get<double>(), im[i][jj].get<double>());
        }
        if (!m.all_finite()) throw ParseError("matrix JSON: non-finite entry");
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

json element_to_json(const BlockDiagonalElement& x) {
    json blocks = json::array();
    for (const auto& b : x.blocks()) blocks.push_back(matrix_to_json(b));
    return json{{"shape", x.shape().block_dims}, {"blocks", std::move(blocks)}};
}

BlockDiagonalElement element_from_json(const json& j) {
    try {
        AlgebraShape shape{j.at("shape").get<std::vector<std::size_t>>()};
        std::vector<ComplexMatrix> blocks;
        for (const auto& bj : j.at("blocks")) blocks.push_back(matrix_from_json(bj));
        return {std::move(shape), std::move(blocks)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("element JSON: ") + e.what());
    }
}

json map_to_json(const TracialMap& phi) {
    json j{{"kind", map_kind_name(phi.kind())},
           {"shape", phi.domain_shape().block_dims}};
    if (phi.kind() == MapKind::doubling) j["inner"] = map_to_json(phi.inner());
    return j;
}

TracialMap map_from_json(const json& j) {
    try {
        MapKind kind = map_kind_from_name(j.at("kind").get<std::string>());
        if (kind == MapKind::doubling) {
            if (!j.contains("inner"))
                throw ParseError("map JSON: doubling requires an inner map");
            return TracialMap::doubling(map_from_json(j.at("inner")));
        }
        AlgebraShape shape{j.at("shape").get<std::vector<std::size_t>>()};
        return TracialMap::make(kind, std::move(shape));
    } catch (const json::exception& e) {
        throw ParseError(std::string("map JSON: ") + e.what());
    }
}

json report_to_json(const MarginReport& r) {
    json margins = json::array();
    for (const auto& [label, value] : r.margins)
        margins.push_back(json{{"label", label}, {"value", value}});
    return json{{"check_id", r.check_id}, {"seed", r.instance_seed},
                {"margins", std::move(margins)}, {"passed", r.passed},
                {"boundary", r.boundary}, {"tolerance", r.tolerance},
                {"scale", r.scale}};
}

MarginReport report_from_json(const json& j) {
    try {
        MarginReport r;
        r.check_id = j.at("check_id").get<std::string>();
        r.instance_seed = j.at("seed").get<std::uint64_t>();
        for (const auto& mj : j.at("margins"))
            r.add_margin(mj.at("label").get<std::string>(), mj.at("value").get<double>());
        r.passed = j.at("passed").get<bool>();
        r.boundary = j.at("boundary").get<bool>();
        r.tolerance = j.at("tolerance").get<double>();
        r.scale = j.at("scale").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
}

std::vector<AlgebraShape> parse_shapes(const std::string& text) {
    std::vector<AlgebraShape> shapes;
    std::stringstream ss(text);
    std::string shape_str;
    while (std::getline(ss, shape_str, ';')) {
        AlgebraShape shape;
        std::stringstream bs(shape_str);
        std::string dim_str;
        while (std::getline(bs, dim_str, ',')) {
            try {
                std::size_t pos = 0;
                long v = std::stol(dim_str, &pos);
                if (pos != dim_str.size() || v <= 0)
                    throw ParseError("invalid block dimension: " + dim_str);
                shape.block_dims.push_back(static_cast<std::size_t>(v));
            } catch (const std::invalid_argument&) {
                throw ParseError("invalid block dimension: " + dim_str);
            }
        }
        shape.validate();
        shapes.push_back(std::move(shape));
    }
    if (shapes.empty()) throw ParseError("no shapes given");
    return shapes;
}

std::string shapes_to_string(const std::vector<AlgebraShape>& shapes) {
    std::ostringstream os;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        if (s) os << ';';
        for (std::size_t i = 0; i < shapes[s].block_dims.size(); ++i) {
            if (i) os << ',';
            os << shapes[s].block_dims[i];
        }
    }
    return os.str();
}

}  // namespace qitineq
