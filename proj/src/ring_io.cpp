#include "hyper/ring_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyper/ideals.hpp"

namespace hyper {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what)
{
    throw Error(ErrorKind::Parse, what);
}

int as_int(const json& j, const std::string& what)
{
    if (!j.is_number_integer())
        parse_error(what + " must be an integer");
    return j.get<int>();
}

std::vector<std::int64_t> as_int_list(const json& j, const std::string& what)
{
    if (!j.is_array())
        parse_error(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            parse_error(what + " must be an array of integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                const std::string& where)
{
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            parse_error("unknown key \"" + it.key() + "\" in " + where);
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out;
}

std::string int_list(const std::vector<std::int64_t>& xs)
{
    std::vector<std::string> parts;
    for (auto x : xs)
        parts.push_back(std::to_string(x));
    return "[" + join(parts) + "]";
}

std::string set_list(const ElementSet& s)
{
    std::vector<std::int64_t> xs;
    s.for_each([&](Element e) { xs.push_back(e); });
    return int_list(xs);
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string RingDescription::label(Element e) const
{
    if (e >= 0 && static_cast<std::size_t>(e) < labels.size())
        return labels[e];
    return std::to_string(e);
}

RingDescription parse_ring(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed ring file: ") + e.what());
    }
    if (!j.is_object())
        parse_error("ring file must be a JSON object");
    RingDescription desc;

    if (j.contains("zt")) {
        check_keys(j, {"zt"}, "ring file");
        const json& z = j["zt"];
        if (!z.is_object() || !z.contains("T") || !z.contains("n"))
            parse_error("zt needs T and n");
        check_keys(z, {"T", "n"}, "zt");
        ZTSpec spec{as_int_list(z["T"], "zt.T"), as_int(z["n"], "zt.n")};
        std::sort(spec.T.begin(), spec.T.end());
        spec.T.erase(std::unique(spec.T.begin(), spec.T.end()), spec.T.end());
        if (spec.T.size() < 2)
            parse_error("zt.T needs at least two distinct integers");
        if (spec.n < 2)
            parse_error("zt.n must be at least 2");
        desc.zt = spec;
        return desc;
    }

    if (j.contains("zmt")) {
        check_keys(j, {"zmt", "name"}, "ring file");
        const json& z = j["zmt"];
        if (!z.is_object() || !z.contains("m") || !z.contains("T"))
            parse_error("zmt needs m and T");
        check_keys(z, {"m", "T"}, "zmt");
        ZmtSpec spec{as_int(z["m"], "zmt.m"), {}};
        if (spec.m < 1 || spec.m > kMaxOrder)
            parse_error("zmt.m out of range");
        for (auto t : as_int_list(z["T"], "zmt.T"))
            spec.T.push_back(static_cast<int>(((t % spec.m) + spec.m) % spec.m));
        std::sort(spec.T.begin(), spec.T.end());
        spec.T.erase(std::unique(spec.T.begin(), spec.T.end()), spec.T.end());
        if (spec.T.empty())
            parse_error("zmt.T must be nonempty");
        desc.ring = build_zmt(spec.m, spec.T);
        if (j.contains("name")) {
            if (!j["name"].is_string())
                parse_error("name must be a string");
            desc.ring->set_name(j["name"].get<std::string>());
        }
        desc.zmt = spec;
        return desc;
    }

    check_keys(j, {"name", "order", "identity", "labels", "add", "hyp"}, "ring file");
    if (!j.contains("order") || !j.contains("add") || !j.contains("hyp"))
        parse_error("ring file needs order, add and hyp (or a zmt/zt shorthand)");
    const int n = as_int(j["order"], "order");
    if (n < 1 || n > kMaxOrder)
        parse_error("order out of range");
    const json& add = j["add"];
    const json& hyp = j["hyp"];
    if (!add.is_array() || add.size() != static_cast<std::size_t>(n))
        parse_error("add must have order rows");
    if (!hyp.is_array() || hyp.size() != static_cast<std::size_t>(n))
        parse_error("hyp must have order rows");
    std::vector<Element> add_table;
    std::vector<ElementSet> hyp_table;
    for (int x = 0; x < n; ++x) {
        if (!add[x].is_array() || add[x].size() != static_cast<std::size_t>(n))
            parse_error("add row " + std::to_string(x) + " must have order entries");
        if (!hyp[x].is_array() || hyp[x].size() != static_cast<std::size_t>(n))
            parse_error("hyp row " + std::to_string(x) + " must have order entries");
        for (int y = 0; y < n; ++y) {
            int v = as_int(add[x][y], "add entry");
            if (v < 0 || v >= n)
                parse_error("add entry out of range at row " + std::to_string(x));
            add_table.push_back(v);
            ElementSet cell;
            for (auto e : as_int_list(hyp[x][y], "hyp entry")) {
                if (e < 0 || e >= n)
                    parse_error("hyp entry out of range at row " + std::to_string(x));
                cell.insert(static_cast<Element>(e));
            }
            hyp_table.push_back(cell);
        }
    }
    Hyperring::Options opts;
    if (j.contains("identity"))
        opts.designated_identity = as_int(j["identity"], "identity");
    desc.ring = Hyperring::validate(n, std::move(add_table), std::move(hyp_table), opts);
    if (j.contains("name")) {
        if (!j["name"].is_string())
            parse_error("name must be a string");
        desc.ring->set_name(j["name"].get<std::string>());
    }
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_array() || l.size() != static_cast<std::size_t>(n))
            parse_error("labels must list one string per element");
        for (const auto& s : l) {
            if (!s.is_string())
                parse_error("labels must be strings");
            desc.labels.push_back(s.get<std::string>());
        }
        auto sorted = desc.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            parse_error("labels must be distinct");
    }
    return desc;
}

RingDescription load_ring(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        parse_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ring(buf.str());
}

std::string emit_ring(const Hyperring& ring, const std::vector<std::string>& labels)
{
    const int n = ring.order();
    std::ostringstream os;
    os << "{\n";
    if (!ring.name().empty())
        os << "  \"name\": " << json(ring.name()).dump() << ",\n";
    os << "  \"order\": " << n << ",\n";
    if (ring.has_identity())
        os << "  \"identity\": " << ring.one() << ",\n";
    if (!labels.empty()) {
        std::vector<std::string> quoted;
        for (const auto& l : labels)
            quoted.push_back(json(l).dump());
        os << "  \"labels\": [" << join(quoted) << "],\n";
    }
    os << "  \"add\": [\n";
    for (Element x = 0; x < n; ++x) {
        std::vector<std::int64_t> row;
        for (Element y = 0; y < n; ++y)
            row.push_back(ring.add(x, y));
        os << "    " << int_list(row) << (x + 1 < n ? "," : "") << "\n";
    }
    os << "  ],\n  \"hyp\": [\n";
    for (Element x = 0; x < n; ++x) {
        std::vector<std::string> row;
        for (Element y = 0; y < n; ++y)
            row.push_back(set_list(ring.hyp(x, y)));
        os << "    [" << join(row) << "]" << (x + 1 < n ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string emit_ring(const RingDescription& desc)
{
    if (desc.zt) {
        return "{\n  \"zt\": {\"T\": " + int_list(desc.zt->T) +
               ", \"n\": " + std::to_string(desc.zt->n) + "}\n}\n";
    }
    if (!desc.ring)
        throw Error(ErrorKind::Parse, "empty ring description");
    if (desc.zmt) {
        std::vector<std::int64_t> ts(desc.zmt->T.begin(), desc.zmt->T.end());
        return "{\n  \"zmt\": {\"m\": " + std::to_string(desc.zmt->m) + ", \"T\": " +
               int_list(ts) + "}\n}\n";
    }
    return emit_ring(*desc.ring, desc.labels);
}

std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    std::string s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            parse_error("unbalanced brackets in \"" + s + "\"");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            parse_error("not an integer: \"" + item + "\"");
        }
        if (used != item.size())
            parse_error("not an integer: \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

ElementSet parse_ideal(const Hyperring& ring, std::string_view text,
                       const std::vector<std::string>& labels)
{
    std::string s = trim(text);
    bool generated = false;
    if (s.rfind("gen:", 0) == 0) {
        generated = true;
        s = trim(s.substr(4));
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            parse_error("expected gen:[...]");
        s = s.substr(1, s.size() - 2);
    }
    ElementSet out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        Element e = -1;
        auto it = std::find(labels.begin(), labels.end(), item);
        if (it != labels.end()) {
            e = static_cast<Element>(it - labels.begin());
        } else {
            std::size_t used = 0;
            try {
                e = std::stoi(item, &used);
            } catch (const std::exception&) {
                parse_error("unknown element \"" + item + "\"");
            }
            if (used != item.size())
                parse_error("unknown element \"" + item + "\"");
        }
        if (e < 0 || e >= ring.order())
            parse_error("element " + item + " outside the carrier");
        out.insert(e);
    }
    if (out.empty())
        parse_error("empty ideal description");
    return generated ? generated_hyperideal(ring, out) : out;
}

}  // namespace hyper
