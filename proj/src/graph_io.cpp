#include <grwalk/graph_io.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include <grwalk/errors.hpp>

namespace grwalk {

Graph parse_edge_list_text(const std::string& text, const SizeLimits& limits) {
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u))
            continue; // blank or comment-only line
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected two vertex ids");
        }
        if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
            throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (edges.empty())
        throw ParseError("no edges found");
    return Graph::from_edge_list(edges, limits);
}

Graph load_edge_list(const std::string& path, const SizeLimits& limits) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list_text(buf.str(), limits);
}

namespace {

int to_int(const std::string& spec, const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size())
        throw ParseError("bad family spec '" + spec + "': not an integer: '" + value + "'");
    return v;
}

} // namespace

Graph build_family(const std::string& spec, const SizeLimits& limits) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad family spec '" + spec + "': " + why);
    };
    std::string name = spec;
    std::map<std::string, std::string> kv;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::istringstream in(spec.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
                throw fail("expected key=value, got '" + item + "'");
            if (!kv.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
                throw fail("duplicate key '" + item.substr(0, eq) + "'");
        }
    }
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw fail("missing parameter '" + key + "'");
        return it->second;
    };
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : kv) {
            bool known = false;
            for (const char* want : keys)
                if (k == want)
                    known = true;
            if (!known)
                throw fail("unknown parameter '" + k + "'");
        }
    };
    if (name == "hamming") {
        expect_keys({"d", "q"});
        return hamming_graph(to_int(spec, need("d")), to_int(spec, need("q")), limits);
    }
    if (name == "johnson") {
        expect_keys({"n", "k"});
        return johnson_graph(to_int(spec, need("n")), to_int(spec, need("k")), limits);
    }
    if (name == "cycle") {
        expect_keys({"n"});
        return cycle_graph(to_int(spec, need("n")), limits);
    }
    if (name == "complete") {
        expect_keys({"n"});
        return complete_graph(to_int(spec, need("n")), limits);
    }
    if (name == "multipartite") {
        expect_keys({"parts"});
        std::vector<int> parts;
        std::istringstream in(need("parts"));
        std::string item;
        while (std::getline(in, item, '+'))
            parts.push_back(to_int(spec, item));
        return complete_multipartite_graph(parts, limits);
    }
    if (name == "petersen") {
        expect_keys({});
        return petersen_graph();
    }
    throw fail("unknown family '" + name + "'");
}

} // namespace grwalk
