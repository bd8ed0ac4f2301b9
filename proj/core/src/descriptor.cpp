#include "summand/descriptor.hpp"

#include <set>
#include <sstream>

namespace summand {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw DescriptorError(path + ": " + what);
}

void require_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.contains(it.key())) fail(path + "." + it.key(), "unknown field");
    }
}

int get_int(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path + "." + key, "missing field");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

std::vector<int> get_int_row(const json& v, const std::string& path, std::size_t want) {
    if (!v.is_array() || v.size() != want)
        fail(path, "expected an array of " + std::to_string(want) + " integers");
    std::vector<int> out;
    out.reserve(want);
    for (std::size_t i = 0; i < want; ++i) {
        const auto& x = v.at(i);
        if (!x.is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "expected an integer");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<int> get_table(const json& j, const std::string& path, const std::string& key, int n) {
    if (!j.contains(key)) fail(path + "." + key, "missing field");
    const auto& v = j.at(key);
    if (!v.is_array() || static_cast<int>(v.size()) != n)
        fail(path + "." + key, "expected " + std::to_string(n) + " rows");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        auto row = get_int_row(v.at(i), path + "." + key + "[" + std::to_string(i) + "]",
                               static_cast<std::size_t>(n));
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

DescriptorPtr make_zmod(int n) {
    if (n < 1) throw DescriptorError("zmod: modulus must be >= 1");
    return std::make_shared<RingDescriptor>(RingDescriptor{ZmodSpec{n}});
}

DescriptorPtr make_table(TableSpec t) {
    const auto n = static_cast<std::size_t>(t.size);
    if (t.size < 1) throw DescriptorError("table: size must be >= 1");
    if (t.add.size() != n * n || t.mul.size() != n * n)
        throw DescriptorError("table: add/mul must be size x size");
    for (int v : t.add)
        if (v < 0 || v >= t.size) throw DescriptorError("table: add entry out of range");
    for (int v : t.mul)
        if (v < 0 || v >= t.size) throw DescriptorError("table: mul entry out of range");
    if (t.zero < 0 || t.zero >= t.size || t.one < 0 || t.one >= t.size)
        throw DescriptorError("table: zero/one out of range");
    return std::make_shared<RingDescriptor>(RingDescriptor{std::move(t)});
}

DescriptorPtr make_matrix(int dim, DescriptorPtr base) {
    if (dim < 1) throw DescriptorError("matrix: dimension must be >= 1");
    if (!base) throw DescriptorError("matrix: missing base");
    return std::make_shared<RingDescriptor>(RingDescriptor{MatrixSpec{dim, std::move(base)}});
}

DescriptorPtr make_pattern(int dim, DescriptorPtr base,
                           const std::vector<std::vector<int>>& mask) {
    if (dim < 1) throw DescriptorError("pattern: dimension must be >= 1");
    if (!base) throw DescriptorError("pattern: missing base");
    if (static_cast<int>(mask.size()) != dim) throw DescriptorError("pattern: mask must be n x n");
    std::vector<std::uint8_t> flat(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(mask[i].size()) != dim)
            throw DescriptorError("pattern: mask must be n x n");
        for (int j = 0; j < dim; ++j) {
            if (mask[i][j] != 0 && mask[i][j] != 1)
                throw DescriptorError("pattern: mask entries must be 0 or 1");
            flat[static_cast<std::size_t>(i) * dim + j] = static_cast<std::uint8_t>(mask[i][j]);
        }
    }
    for (int i = 0; i < dim; ++i)
        if (!flat[static_cast<std::size_t>(i) * dim + i])
            throw DescriptorError("pattern: mask must contain the full diagonal");
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            for (int j = 0; j < dim; ++j)
                if (flat[static_cast<std::size_t>(i) * dim + k] &&
                    flat[static_cast<std::size_t>(k) * dim + j] &&
                    !flat[static_cast<std::size_t>(i) * dim + j])
                    throw DescriptorError("pattern: mask is not multiplicatively closed at (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ")");
    return std::make_shared<RingDescriptor>(
        RingDescriptor{PatternSpec{dim, std::move(base), std::move(flat)}});
}

DescriptorPtr make_product(std::vector<DescriptorPtr> factors) {
    if (factors.empty()) throw DescriptorError("product: needs at least one factor");
    for (const auto& f : factors)
        if (!f) throw DescriptorError("product: missing factor");
    return std::make_shared<RingDescriptor>(RingDescriptor{ProductSpec{std::move(factors)}});
}

DescriptorPtr make_corner(DescriptorPtr base, int idem) {
    if (!base) throw DescriptorError("corner: missing base");
    return std::make_shared<RingDescriptor>(RingDescriptor{CornerSpec{std::move(base), idem}});
}

DescriptorPtr make_opposite(DescriptorPtr base) {
    if (!base) throw DescriptorError("opposite: missing base");
    return std::make_shared<RingDescriptor>(RingDescriptor{OppositeSpec{std::move(base)}});
}

DescriptorPtr descriptor_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("kind")) fail(path + ".kind", "missing field");
    if (!j.at("kind").is_string()) fail(path + ".kind", "expected a string");
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "zmod") {
        require_keys(j, path, {"kind", "n"});
        const int n = get_int(j, path, "n");
        if (n < 1) fail(path + ".n", "modulus must be >= 1");
        return make_zmod(n);
    }
    if (kind == "table") {
        require_keys(j, path, {"kind", "size", "add", "mul", "zero", "one"});
        TableSpec t;
        t.size = get_int(j, path, "size");
        if (t.size < 1) fail(path + ".size", "size must be >= 1");
        t.add = get_table(j, path, "add", t.size);
        t.mul = get_table(j, path, "mul", t.size);
        t.zero = get_int(j, path, "zero");
        t.one = get_int(j, path, "one");
        try {
            return make_table(std::move(t));
        } catch (const DescriptorError& e) {
            fail(path, e.what());
        }
    }
    if (kind == "matrix") {
        require_keys(j, path, {"kind", "n", "base"});
        const int n = get_int(j, path, "n");
        if (n < 1) fail(path + ".n", "dimension must be >= 1");
        if (!j.contains("base")) fail(path + ".base", "missing field");
        return make_matrix(n, descriptor_from_json(j.at("base"), path + ".base"));
    }
    if (kind == "pattern") {
        require_keys(j, path, {"kind", "n", "base", "mask"});
        const int n = get_int(j, path, "n");
        if (n < 1) fail(path + ".n", "dimension must be >= 1");
        if (!j.contains("base")) fail(path + ".base", "missing field");
        if (!j.contains("mask")) fail(path + ".mask", "missing field");
        const auto& mj = j.at("mask");
        if (!mj.is_array() || static_cast<int>(mj.size()) != n)
            fail(path + ".mask", "expected " + std::to_string(n) + " rows");
        std::vector<std::vector<int>> mask;
        for (int i = 0; i < n; ++i)
            mask.push_back(get_int_row(mj.at(i), path + ".mask[" + std::to_string(i) + "]",
                                       static_cast<std::size_t>(n)));
        try {
            return make_pattern(n, descriptor_from_json(j.at("base"), path + ".base"), mask);
        } catch (const DescriptorError& e) {
            fail(path + ".mask", e.what());
        }
    }
    if (kind == "product") {
        require_keys(j, path, {"kind", "factors"});
        if (!j.contains("factors")) fail(path + ".factors", "missing field");
        const auto& fj = j.at("factors");
        if (!fj.is_array() || fj.empty()) fail(path + ".factors", "expected a non-empty array");
        std::vector<DescriptorPtr> factors;
        for (std::size_t i = 0; i < fj.size(); ++i)
            factors.push_back(
                descriptor_from_json(fj.at(i), path + ".factors[" + std::to_string(i) + "]"));
        return make_product(std::move(factors));
    }
    if (kind == "corner") {
        require_keys(j, path, {"kind", "base", "e"});
        if (!j.contains("base")) fail(path + ".base", "missing field");
        const int e = get_int(j, path, "e");
        return make_corner(descriptor_from_json(j.at("base"), path + ".base"), e);
    }
    if (kind == "opposite") {
        require_keys(j, path, {"kind", "base"});
        if (!j.contains("base")) fail(path + ".base", "missing field");
        return make_opposite(descriptor_from_json(j.at("base"), path + ".base"));
    }
    fail(path + ".kind", "unknown kind \"" + kind + "\"");
}

DescriptorPtr parse_descriptor(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DescriptorError(std::string("syntax error: ") + e.what());
    }
    return descriptor_from_json(j);
}

nlohmann::json descriptor_to_json(const RingDescriptor& d) {
    json j;
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ZmodSpec>) {
                j = {{"kind", "zmod"}, {"n", spec.modulus}};
            } else if constexpr (std::is_same_v<T, TableSpec>) {
                json add = json::array(), mul = json::array();
                for (int i = 0; i < spec.size; ++i) {
                    json ra = json::array(), rm = json::array();
                    for (int k = 0; k < spec.size; ++k) {
                        ra.push_back(spec.add[static_cast<std::size_t>(i) * spec.size + k]);
                        rm.push_back(spec.mul[static_cast<std::size_t>(i) * spec.size + k]);
                    }
                    add.push_back(ra);
                    mul.push_back(rm);
                }
                j = {{"kind", "table"}, {"size", spec.size}, {"add", add},
                     {"mul", mul},      {"zero", spec.zero}, {"one", spec.one}};
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                j = {{"kind", "matrix"}, {"n", spec.dim}, {"base", descriptor_to_json(*spec.base)}};
            } else if constexpr (std::is_same_v<T, PatternSpec>) {
                json mask = json::array();
                for (int i = 0; i < spec.dim; ++i) {
                    json row = json::array();
                    for (int k = 0; k < spec.dim; ++k)
                        row.push_back(
                            static_cast<int>(spec.mask[static_cast<std::size_t>(i) * spec.dim + k]));
                    mask.push_back(row);
                }
                j = {{"kind", "pattern"},
                     {"n", spec.dim},
                     {"base", descriptor_to_json(*spec.base)},
                     {"mask", mask}};
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                json factors = json::array();
                for (const auto& f : spec.factors) factors.push_back(descriptor_to_json(*f));
                j = {{"kind", "product"}, {"factors", factors}};
            } else if constexpr (std::is_same_v<T, CornerSpec>) {
                j = {{"kind", "corner"}, {"base", descriptor_to_json(*spec.base)}, {"e", spec.idem}};
            } else {
                j = {{"kind", "opposite"}, {"base", descriptor_to_json(*spec.base)}};
            }
        },
        d.spec);
    return j;
}

std::string describe(const RingDescriptor& d) {
    std::ostringstream os;
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ZmodSpec>) {
                os << "zmod(" << spec.modulus << ")";
            } else if constexpr (std::is_same_v<T, TableSpec>) {
                os << "table(" << spec.size << ")";
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                os << "matrix(" << spec.dim << ", " << describe(*spec.base) << ")";
            } else if constexpr (std::is_same_v<T, PatternSpec>) {
                os << "pattern(" << spec.dim << ", " << describe(*spec.base) << ")";
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                os << "product(";
                for (std::size_t i = 0; i < spec.factors.size(); ++i) {
                    if (i) os << ", ";
                    os << describe(*spec.factors[i]);
                }
                os << ")";
            } else if constexpr (std::is_same_v<T, CornerSpec>) {
                os << "corner(" << describe(*spec.base) << ", e=" << spec.idem << ")";
            } else {
                os << "opposite(" << describe(*spec.base) << ")";
            }
        },
        d.spec);
    return os.str();
}

}  // namespace summand
