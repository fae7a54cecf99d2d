#include "rpl/textio.hpp"

#include <sstream>

namespace rpl {

namespace {

std::string freq_body(const Partition& pi, char sep) {
    std::ostringstream os;
    bool first = true;
    for (auto [value, count] : pi.frequencies()) {
        if (!first) os << sep;
        os << value << '^' << count;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string freq_token(const Partition& pi) {
    if (pi.empty()) return "-";
    return freq_body(pi, '.');
}

std::string freq_pretty(const Partition& pi) { return "(" + freq_body(pi, ',') + ")"; }

Partition parse_freq(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    if (body.empty() || body == "-") return Partition{};
    std::map<int, int> freq;
    std::string token;
    std::istringstream in(body);
    while (std::getline(in, token, body.find(',') != std::string::npos ? ',' : '.')) {
        auto caret = token.find('^');
        if (caret == std::string::npos)
            throw std::invalid_argument("parse_freq: bad token '" + token + "'");
        int value = std::stoi(token.substr(0, caret));
        int count = std::stoi(token.substr(caret + 1));
        freq[value] += count;
    }
    return Partition::from_frequencies(freq);
}

std::string parts_json(const Partition& pi) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < pi.parts().size(); ++i) {
        if (i) os << ',';
        os << pi.parts()[i];
    }
    os << ']';
    return os.str();
}

}  // namespace rpl
