#include "arcdiag/format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace arcdiag {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream stream{std::string(text)};
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

bool is_integer(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

int parse_int(const std::string& token, long long position) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::ParseError, "expected an integer, got '" + token + "'", position);
    }
    return value;
}

}  // namespace

DiagramFormat detect_format(std::string_view text) {
    const std::vector<std::string> tokens = tokenize(text);
    if (tokens.empty()) {
        return DiagramFormat::Pairing;
    }
    bool all_integers = true;
    bool any_dash = false;
    for (const std::string& token : tokens) {
        if (!is_integer(token)) {
            all_integers = false;
        }
        if (token.find('-') != std::string::npos) {
            any_dash = true;
        }
    }
    if (all_integers) {
        return DiagramFormat::Pairing;
    }
    if (any_dash) {
        return DiagramFormat::Pairs;
    }
    return DiagramFormat::Gauss;
}

ChordDiagram parse_diagram(std::string_view text, DiagramFormat format) {
    if (format == DiagramFormat::Auto) {
        format = detect_format(text);
    }
    const std::vector<std::string> tokens = tokenize(text);
    switch (format) {
        case DiagramFormat::Pairing: {
            std::vector<int> pairing;
            pairing.reserve(tokens.size());
            for (size_t i = 0; i < tokens.size(); ++i) {
                pairing.push_back(parse_int(tokens[i], static_cast<long long>(i)));
            }
            return ChordDiagram::from_pairing(pairing);
        }
        case DiagramFormat::Pairs: {
            std::vector<Chord> chords;
            chords.reserve(tokens.size());
            for (size_t i = 0; i < tokens.size(); ++i) {
                const std::string& token = tokens[i];
                const size_t dash = token.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
                    throw Error(ErrorKind::ParseError,
                                "expected ENDPOINT-ENDPOINT, got '" + token + "'",
                                static_cast<long long>(i));
                }
                const int a = parse_int(token.substr(0, dash), static_cast<long long>(i));
                const int b = parse_int(token.substr(dash + 1), static_cast<long long>(i));
                chords.push_back(make_chord(a, b));
            }
            return ChordDiagram::from_chords(chords, 2 * static_cast<int>(chords.size()));
        }
        case DiagramFormat::Gauss:
            return ChordDiagram::from_gauss_word(tokens);
        case DiagramFormat::Auto:
            break;
    }
    throw Error(ErrorKind::ParseError, "unresolved diagram format");
}

std::string to_pairing_string(const ChordDiagram& diagram) {
    std::string out;
    for (int i = 0; i < diagram.point_count(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(diagram.pairing()[i]);
    }
    return out;
}

std::string to_pairs_string(const ChordDiagram& diagram) {
    std::string out;
    bool first = true;
    for (const Chord& c : diagram.chords()) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += std::to_string(c.a);
        out += '-';
        out += std::to_string(c.b);
    }
    return out;
}

}  // namespace arcdiag
