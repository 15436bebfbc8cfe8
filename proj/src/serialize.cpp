#include "z2coh/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "z2coh/errors.hpp"

namespace z2coh {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

Integer integer_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string())
    {
        try
        {
            return Integer(j.get<std::string>());
        }
        catch (const std::exception&)
        {
        }
    }
    throw InvalidComplex(where + ": expected an integer");
}

const json& field(const json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw InvalidComplex(std::string("missing field '") + key + "'");
    return *it;
}

const json& array_at(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || n >= j.size() || !j[n].is_array())
        throw InvalidComplex(where + ": expected an array");
    return j[n];
}

std::string location(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}   // namespace

std::string to_json(const Z2CwComplex& x)
{
    const int d = x.dimension();
    json cells = json::array();
    json action = json::array();
    json boundary = json::array();
    json fixed = json::array();
    for (int n = 0; n <= d; ++n)
    {
        cells.push_back(x.labels(n));
        json act = json::array();
        for (const SignedCell& s : x.action(n))
            act.push_back(json::array({s.index, s.sign}));
        action.push_back(std::move(act));

        json trip = json::array();
        const IntegerMatrix b = x.boundary(n);
        for (std::size_t c = 0; c < b.cols(); ++c)
        {
            for (std::size_t r = 0; r < b.rows(); ++r)
            {
                if (b(r, c) != 0)
                    trip.push_back(json::array({r, c, integer_to_json(b(r, c))}));
            }
        }
        boundary.push_back(std::move(trip));

        json fx = json::array();
        for (std::size_t i = 0; i < x.num_cells(n); ++i)
            fx.push_back(static_cast<bool>(x.is_fixed(n, i)));
        fixed.push_back(std::move(fx));
    }
    json doc;
    doc["format"] = "z2cw";
    doc["version"] = 1;
    doc["dims"] = d;
    doc["cells"] = std::move(cells);
    doc["action"] = std::move(action);
    doc["boundary"] = std::move(boundary);
    doc["fixed"] = std::move(fixed);
    return doc.dump(2) + "\n";
}

Z2CwComplex from_json(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError("malformed JSON at " + location(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        throw InvalidComplex("top level must be an object");
    if (field(doc, "format") != "z2cw")
        throw InvalidComplex("format must be \"z2cw\"");
    if (field(doc, "version") != 1)
        throw InvalidComplex("unsupported version");
    const json& dims_j = field(doc, "dims");
    if (!dims_j.is_number_integer() || dims_j.get<long long>() < -1)
        throw InvalidComplex("dims must be an integer >= -1");
    const int d = dims_j.get<int>();
    const json& cells = field(doc, "cells");
    const json& action = field(doc, "action");
    const json& boundary = field(doc, "boundary");
    const json& fixed = field(doc, "fixed");
    for (const auto* arr : {&cells, &action, &boundary, &fixed})
    {
        if (!arr->is_array() || static_cast<int>(arr->size()) != d + 1)
            throw InvalidComplex("cells, action, boundary and fixed must have dims + 1 entries");
    }

    std::vector<Z2CwComplex::Cells> out;
    for (int n = 0; n <= d; ++n)
    {
        const auto un = static_cast<std::size_t>(n);
        const std::string dim = "dimension " + std::to_string(n);
        Z2CwComplex::Cells c;
        for (const json& l : array_at(cells, un, "cells[" + std::to_string(n) + "]"))
        {
            if (!l.is_string())
                throw InvalidComplex(dim + ": labels must be strings");
            c.labels.push_back(l.get<std::string>());
        }
        const std::size_t count = c.labels.size();

        const json& act = array_at(action, un, "action[" + std::to_string(n) + "]");
        if (act.size() != count)
            throw InvalidComplex(dim + ": action has " + std::to_string(act.size()) + " entries for " +
                                 std::to_string(count) + " cells");
        for (const json& a : act)
        {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_integer())
                throw InvalidComplex(dim + ": action entries must be [index, sign]");
            c.action.push_back(SignedCell{a[0].get<std::size_t>(), a[1].get<int>()});
        }

        const json& fx = array_at(fixed, un, "fixed[" + std::to_string(n) + "]");
        if (fx.size() != count)
            throw InvalidComplex(dim + ": fixed mask has the wrong length");
        for (const json& f : fx)
        {
            if (!f.is_boolean())
                throw InvalidComplex(dim + ": fixed entries must be booleans");
            c.fixed.push_back(f.get<bool>());
        }

        const std::size_t rows = n == 0 ? 0 : out[un - 1].labels.size();
        c.boundary = IntegerMatrix(rows, count);
        for (const json& t : array_at(boundary, un, "boundary[" + std::to_string(n) + "]"))
        {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
                throw InvalidComplex(dim + ": boundary entries must be [row, col, value]");
            const auto r = t[0].get<std::size_t>();
            const auto col = t[1].get<std::size_t>();
            if (r >= rows || col >= count)
                throw InvalidComplex(dim + ": boundary entry [" + std::to_string(r) + ", " + std::to_string(col) +
                                     "] out of range");
            c.boundary(r, col) = integer_from_json(t[2], dim + " boundary value");
        }
        out.push_back(std::move(c));
    }
    return Z2CwComplex(std::move(out));
}

std::string content_hash(const Z2CwComplex& x)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : to_json(x))
    {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}   // namespace z2coh
