#include "madn/netio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "madn/util.hpp"

namespace madn {
namespace {

struct CodeLink {
    std::string src, dst;
    double weight;
};

// Nodes and links in lexicographic code order, shared by all writers.
struct Ordered {
    std::vector<std::string> nodes;
    std::vector<CodeLink> links;
};

Ordered ordered_view(const Network& net) {
    Ordered v;
    v.nodes = net.node_codes();
    std::sort(v.nodes.begin(), v.nodes.end());
    net.for_each_link([&](NodeId u, NodeId w, double weight) {
        v.links.push_back({net.code(u), net.code(w), weight});
    });
    std::sort(v.links.begin(), v.links.end(), [](const CodeLink& a, const CodeLink& b) {
        return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
    });
    return v;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_graphml(const Ordered& v, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph edgedefault=\"directed\">\n";
    for (const std::string& code : v.nodes)
        out << "    <node id=\"" << xml_escape(code) << "\"/>\n";
    for (const CodeLink& l : v.links)
        out << "    <edge source=\"" << xml_escape(l.src) << "\" target=\"" << xml_escape(l.dst)
            << "\"><data key=\"w\">" << format_double(l.weight) << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

Network read_graphml(std::istream& in) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError(std::string("graphml: ") + e.message(), e.line());
    }

    auto graphml = tree.get_child_optional("graphml");
    if (!graphml) throw ParseError("graphml: missing <graphml> root");

    // Which <key> ids refer to an edge attribute named "weight".
    std::string weight_key = "w";
    for (const auto& [name, child] : *graphml) {
        if (name != "key") continue;
        if (child.get<std::string>("<xmlattr>.attr.name", "") == "weight")
            weight_key = child.get<std::string>("<xmlattr>.id", "w");
    }

    auto graph = graphml->get_child_optional("graph");
    if (!graph) throw ParseError("graphml: missing <graph> element");

    Network net;
    for (const auto& [name, child] : *graph) {
        if (name == "node") {
            auto id = child.get_optional<std::string>("<xmlattr>.id");
            if (!id || id->empty()) throw ParseError("graphml: <node> without id");
            if (net.find(*id)) throw ParseError("graphml: duplicate node id '" + *id + "'");
            net.add_node(*id);
        } else if (name == "edge") {
            auto src = child.get_optional<std::string>("<xmlattr>.source");
            auto dst = child.get_optional<std::string>("<xmlattr>.target");
            if (!src || !dst) throw ParseError("graphml: <edge> without source/target");
            double weight = 1.0;
            for (const auto& [ename, edata] : child) {
                if (ename != "data") continue;
                if (edata.get<std::string>("<xmlattr>.key", "") == weight_key)
                    weight = parse_double(trim(edata.get_value<std::string>()));
            }
            try {
                net.add_link(*src, *dst, weight);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("graphml: ") + e.what());
            }
        }
    }
    return net;
}

void check_plain_code(const std::string& code) {
    for (char c : code)
        if (c == ' ' || c == '\t' || c == '\n')
            throw ConfigError("node code with whitespace cannot be written: '" + code + "'");
}

void write_edge_list(const Ordered& v, std::ostream& out) {
    std::set<std::string> linked;
    for (const CodeLink& l : v.links) {
        check_plain_code(l.src);
        check_plain_code(l.dst);
        linked.insert(l.src);
        linked.insert(l.dst);
        out << l.src << ' ' << l.dst << ' ' << format_double(l.weight) << '\n';
    }
    for (const std::string& code : v.nodes) {
        if (linked.count(code)) continue;
        check_plain_code(code);
        out << code << '\n';
    }
}

Network read_edge_list(std::istream& in) {
    Network net;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            net.add_node(tokens[0]);
        } else if (tokens.size() == 3) {
            double w;
            try {
                w = parse_double(tokens[2]);
                net.add_link(tokens[0], tokens[1], w);
            } catch (const ParseError&) {
                throw ParseError("edge list: bad weight '" + tokens[2] + "'", lineno);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("edge list: ") + e.what(), lineno);
            }
        } else {
            throw ParseError("edge list: expected 'SRC DST WEIGHT' or a bare node", lineno);
        }
    }
    return net;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void write_dot(const Ordered& v, std::ostream& out) {
    out << "digraph madn {\n";
    for (const std::string& code : v.nodes) out << "  " << dot_quote(code) << ";\n";
    for (const CodeLink& l : v.links)
        out << "  " << dot_quote(l.src) << " -> " << dot_quote(l.dst) << " [weight="
            << format_double(l.weight) << "];\n";
    out << "}\n";
}

// Minimal tokenizer for the DOT subset this tool writes.
struct DotLexer {
    std::string text;
    std::size_t pos = 0;
    std::size_t line = 1;

    struct Token {
        std::string value;
        std::size_t line;
        bool eof = false;
    };

    Token next() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos;
            } else {
                break;
            }
        }
        if (pos >= text.size()) return {"", line, true};
        char c = text[pos];
        if (c == '"') {
            std::string value;
            ++pos;
            while (pos < text.size() && text[pos] != '"') {
                if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
                if (text[pos] == '\n') ++line;
                value += text[pos++];
            }
            if (pos >= text.size()) throw ParseError("dot: unterminated string", line);
            ++pos;
            return {value, line, false};
        }
        if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
            pos += 2;
            return {"->", line, false};
        }
        if (std::string("{}[];=,").find(c) != std::string::npos) {
            ++pos;
            return {std::string(1, c), line, false};
        }
        std::string value;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               std::string("{}[];=,\"").find(text[pos]) == std::string::npos &&
               !(text[pos] == '-' && pos + 1 < text.size() && text[pos + 1] == '>'))
            value += text[pos++];
        return {value, line, false};
    }
};

Network read_dot(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    DotLexer lex{buf.str()};

    auto expect = [&](const std::string& want) {
        auto t = lex.next();
        if (t.eof || t.value != want)
            throw ParseError("dot: expected '" + want + "'", t.line);
        return t;
    };

    auto t = lex.next();
    if (t.eof || t.value != "digraph") throw ParseError("dot: expected 'digraph'", t.line);
    t = lex.next();  // optional graph name
    if (!t.eof && t.value != "{") t = lex.next();
    if (t.eof || t.value != "{") throw ParseError("dot: expected '{'", t.line);

    Network net;
    while (true) {
        t = lex.next();
        if (t.eof) throw ParseError("dot: missing '}'", t.line);
        if (t.value == "}") break;
        if (t.value == ";") continue;
        std::string src = t.value;
        t = lex.next();
        if (t.eof) throw ParseError("dot: truncated statement", t.line);
        if (t.value == ";" || t.value == "}") {
            net.add_node(src);
            if (t.value == "}") break;
            continue;
        }
        if (t.value != "->") throw ParseError("dot: expected '->' or ';'", t.line);
        t = lex.next();
        if (t.eof || t.value == ";" || t.value == "}")
            throw ParseError("dot: edge without target", t.line);
        std::string dst = t.value;
        double weight = 1.0;
        t = lex.next();
        if (!t.eof && t.value == "[") {
            while (true) {
                auto key = lex.next();
                if (key.eof) throw ParseError("dot: unterminated attribute list", key.line);
                if (key.value == "]") break;
                if (key.value == ",") continue;
                expect("=");
                auto value = lex.next();
                if (value.eof) throw ParseError("dot: attribute without value", value.line);
                if (key.value == "weight") {
                    try {
                        weight = parse_double(value.value);
                    } catch (const ParseError&) {
                        throw ParseError("dot: bad weight '" + value.value + "'", value.line);
                    }
                }
            }
            t = lex.next();
        }
        try {
            net.add_link(src, dst, weight);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("dot: ") + e.what(), t.line);
        }
        if (t.eof) throw ParseError("dot: missing '}'", t.line);
        if (t.value == "}") break;
        if (t.value != ";") throw ParseError("dot: expected ';'", t.line);
    }
    return net;
}

}  // namespace

NetFormat net_format_from_name(std::string_view name) {
    if (name == "graphml") return NetFormat::graphml;
    if (name == "edgelist" || name == "edge-list") return NetFormat::edge_list;
    if (name == "dot") return NetFormat::dot;
    throw ConfigError("unknown network format: '" + std::string(name) + "'");
}

void serialize_network(const Network& net, NetFormat format, std::ostream& out) {
    Ordered v = ordered_view(net);
    switch (format) {
        case NetFormat::graphml: write_graphml(v, out); break;
        case NetFormat::edge_list: write_edge_list(v, out); break;
        case NetFormat::dot: write_dot(v, out); break;
    }
}

std::string serialize_network(const Network& net, NetFormat format) {
    std::ostringstream out;
    serialize_network(net, format, out);
    return out.str();
}

Network deserialize_network(std::istream& in, NetFormat format) {
    switch (format) {
        case NetFormat::graphml: return read_graphml(in);
        case NetFormat::edge_list: return read_edge_list(in);
        case NetFormat::dot: return read_dot(in);
    }
    throw ConfigError("unknown network format");
}

Network deserialize_network(const std::string& text, NetFormat format) {
    std::istringstream in(text);
    return deserialize_network(in, format);
}

namespace {
NetFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "dot" || ext == "gv") return NetFormat::dot;
    if (ext == "edges" || ext == "edgelist" || ext == "txt") return NetFormat::edge_list;
    return NetFormat::graphml;
}
}  // namespace

void write_network_file(const Network& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    serialize_network(net, format_from_path(path), out);
}

Network read_network_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return deserialize_network(in, format_from_path(path));
}

}  // namespace madn
