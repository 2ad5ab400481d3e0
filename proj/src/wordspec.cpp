#include "thetarich/wordspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace thetarich {

namespace {

constexpr std::string_view kArrow = "<->";

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                    std::string(text) + "'");
    return value;
}

}  // namespace

Antimorphism parse_theta_spec(const Alphabet& alphabet, std::string_view text) {
    constexpr Letter unset = -1;
    std::vector<Letter> perm(alphabet.size(), unset);
    auto lookup = [&](std::string_view name, const std::string& token) {
        auto letter = alphabet.find(name);
        if (!letter)
            throw std::invalid_argument("theta spec token '" + token +
                                        "' names unknown letter '" + std::string(name) + "'");
        return *letter;
    };
    auto assign = [&](Letter a, Letter b, const std::string& token) {
        if (perm[static_cast<std::size_t>(a)] != unset)
            throw std::invalid_argument("theta spec token '" + token + "' lists letter '" +
                                        alphabet.name(a) + "' twice");
        perm[static_cast<std::size_t>(a)] = b;
    };
    for (const std::string& token : split_tokens(text)) {
        std::size_t arrow = token.find(kArrow);
        if (arrow == std::string::npos) {
            Letter a = lookup(token, token);
            assign(a, a, token);
            continue;
        }
        Letter a = lookup(std::string_view(token).substr(0, arrow), token);
        Letter b = lookup(std::string_view(token).substr(arrow + kArrow.size()), token);
        assign(a, b, token);
        if (a != b) assign(b, a, token);
    }
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == unset)
            throw std::invalid_argument("theta spec leaves letter '" +
                                        alphabet.name(static_cast<Letter>(i)) + "' unmapped");
    return Antimorphism(alphabet, std::move(perm));
}

Antimorphism theta_from_spec(std::string_view text) {
    std::vector<std::string> names;
    auto add = [&](std::string_view name) {
        if (name.empty())
            throw std::invalid_argument("theta spec contains an empty letter name");
        if (std::find(names.begin(), names.end(), name) == names.end())
            names.emplace_back(name);
    };
    for (const std::string& token : split_tokens(text)) {
        std::size_t arrow = token.find(kArrow);
        if (arrow == std::string::npos) {
            add(token);
        } else {
            add(std::string_view(token).substr(0, arrow));
            add(std::string_view(token).substr(arrow + kArrow.size()));
        }
    }
    if (names.empty()) throw std::invalid_argument("theta spec is empty");
    return parse_theta_spec(Alphabet(names), text);
}

std::string theta_spec_string(const Antimorphism& theta) {
    const Alphabet& alpha = theta.alphabet();
    std::ostringstream out;
    bool first = true;
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
        Letter b = theta.image(a);
        if (b < a) continue;
        if (!first) out << ' ';
        first = false;
        out << alpha.name(a);
        if (b != a) out << kArrow << alpha.name(b);
    }
    return out.str();
}

WordSpec parse_word_spec(std::string_view text) {
    std::optional<std::string> alphabet_line;
    std::optional<std::string> theta_line;
    std::vector<std::string> word_lines;
    bool word_seen = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("word spec line '" + std::string(line) +
                                        "' has no 'key:' prefix");
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = trim(line.substr(colon + 1));
        if (key == "alphabet") {
            if (alphabet_line)
                throw std::invalid_argument("word spec repeats the alphabet: line");
            alphabet_line = std::string(value);
        } else if (key == "theta") {
            if (theta_line) throw std::invalid_argument("word spec repeats the theta: line");
            theta_line = std::string(value);
        } else if (key == "word") {
            word_seen = true;
            word_lines.emplace_back(value);
        } else {
            throw std::invalid_argument("word spec has unknown key '" + std::string(key) +
                                        "'");
        }
    }
    if (!alphabet_line) throw std::invalid_argument("word spec is missing the alphabet: line");
    if (!theta_line) throw std::invalid_argument("word spec is missing the theta: line");
    if (!word_seen) throw std::invalid_argument("word spec is missing the word: line");

    std::vector<std::string> names = split_tokens(*alphabet_line);
    if (names.empty()) throw std::invalid_argument("word spec alphabet: line lists no letters");
    Alphabet alphabet(names);
    Antimorphism theta = parse_theta_spec(alphabet, *theta_line);
    std::string joined;
    for (const std::string& part : word_lines) {
        joined += part;
        joined += ' ';
    }
    return WordSpec{alphabet, std::move(theta), alphabet.parse(joined)};
}

std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text) {
    std::string_view s = trim(text);
    std::size_t dots = s.find("..");
    if (dots == std::string_view::npos) {
        std::size_t n = parse_size(s, "n range");
        return {n, n};
    }
    std::size_t lo = parse_size(trim(s.substr(0, dots)), "n range");
    std::size_t hi = parse_size(trim(s.substr(dots + 2)), "n range");
    if (lo > hi)
        throw std::invalid_argument("n range '" + std::string(text) + "' is decreasing");
    return {lo, hi};
}

ResolvedSource resolve_generator_spec(const std::string& spec,
                                      const std::optional<Antimorphism>& theta) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        CorpusEntry entry = corpus_entry(spec);
        return {entry.generator, entry.theta};
    }
    std::string kind = spec.substr(0, colon);
    std::string payload = spec.substr(colon + 1);

    if (kind == "morphic") {
        if (payload != "ex5.1" && payload != "ex5.2" && payload != "ex5.3")
            throw std::invalid_argument("morphic generator expects ex5.1, ex5.2 or ex5.3; got '" +
                                        payload + "'");
        CorpusEntry entry = corpus_entry(payload);
        return {entry.generator, entry.theta};
    }
    if (kind == "periodic") {
        if (!theta)
            throw std::invalid_argument("periodic:<word> needs a theta spec to fix the alphabet");
        Word v = theta->alphabet().parse(payload);
        return {std::shared_ptr<const WordGenerator>(periodic_word(std::move(v))),
                std::nullopt};
    }
    if (kind == "sturmian") {
        std::vector<unsigned> directive;
        std::size_t pos = 0;
        while (pos <= payload.size()) {
            std::size_t end = payload.find(',', pos);
            if (end == std::string::npos) end = payload.size();
            std::string_view item = trim(std::string_view(payload).substr(pos, end - pos));
            pos = end + 1;
            if (item == "..." && !directive.empty() && pos > payload.size()) break;
            std::size_t value = parse_size(item, "sturmian directive");
            if (value == 0)
                throw std::invalid_argument("sturmian directive entries must be positive");
            directive.push_back(static_cast<unsigned>(value));
        }
        if (directive.empty())
            throw std::invalid_argument("sturmian directive is empty");
        return {std::shared_ptr<const WordGenerator>(sturmian_standard(std::move(directive))),
                std::nullopt};
    }
    if (kind == "theta-standard") {
        if (!theta)
            throw std::invalid_argument("theta-standard needs a theta spec to fix the alphabet");
        std::optional<std::string> seed_text;
        std::optional<std::string> directive_text;
        std::size_t pos = 0;
        while (pos <= payload.size()) {
            std::size_t end = payload.find(',', pos);
            if (end == std::string::npos) end = payload.size();
            std::string_view item = trim(std::string_view(payload).substr(pos, end - pos));
            pos = end + 1;
            if (item.empty()) continue;
            std::size_t eq = item.find('=');
            if (eq == std::string_view::npos)
                throw std::invalid_argument("theta-standard expects key=value parts; got '" +
                                            std::string(item) + "'");
            std::string_view key = trim(item.substr(0, eq));
            std::string_view value = trim(item.substr(eq + 1));
            if (key == "seed") {
                seed_text = std::string(value);
            } else if (key == "directive") {
                directive_text = std::string(value);
            } else {
                throw std::invalid_argument("theta-standard has unknown key '" +
                                            std::string(key) + "'");
            }
        }
        if (!directive_text || directive_text->empty())
            throw std::invalid_argument("theta-standard needs a nonempty directive=");
        const Alphabet& alpha = theta->alphabet();
        Word seed = alpha.parse(seed_text.value_or(""));
        Word directive = alpha.parse(*directive_text);
        return {std::shared_ptr<const WordGenerator>(
                    theta_standard_with_seed(*theta, std::move(seed), std::move(directive))),
                std::nullopt};
    }
    throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

}  // namespace thetarich
