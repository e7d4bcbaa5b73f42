#ifndef MADN_NETIO_HPP_
#define MADN_NETIO_HPP_

#include <iosfwd>
#include <string>

#include "madn/network.hpp"

namespace madn {

enum class NetFormat { graphml, edge_list, dot };

NetFormat net_format_from_name(std::string_view name);  // "graphml"|"edgelist"|"dot"

// Deterministic output: nodes and links in lexicographic code order, weights
// in shortest round-trip decimal form. deserialize(serialize(n)) == n for
// every format.
//
// Edge-list lines are "SRC DST WEIGHT"; a line with a single token declares
// an isolated node, so networks with unlinked nodes survive the round trip.
void serialize_network(const Network& net, NetFormat format, std::ostream& out);
std::string serialize_network(const Network& net, NetFormat format);

Network deserialize_network(std::istream& in, NetFormat format);  // throws ParseError
Network deserialize_network(const std::string& text, NetFormat format);

// Convenience wrappers; format inferred from the file extension
// (.graphml, .edges/.txt, .dot) unless given explicitly.
void write_network_file(const Network& net, const std::string& path);
Network read_network_file(const std::string& path);

}  // namespace madn

#endif  // MADN_NETIO_HPP_
