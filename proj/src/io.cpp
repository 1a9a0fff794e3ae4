#include "tempvote/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tempvote {

using json = nlohmann::ordered_json;

namespace {

json parseDocument(const std::string& bytes) {
    json doc = json::parse(bytes, nullptr, false);
    if (doc.is_discarded()) throw ParseError("document: not valid JSON");
    return doc;
}

void rejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ParseError(where + ": unknown key '" + it.key() + "'");
    }
}

int candidateIndexOrThrow(const TemporalElection& e, const std::string& name,
                          const std::string& where) {
    int idx = e.candidateIndex(name);
    if (idx < 0) throw ParseError(where + ": unknown candidate name '" + name + "'");
    return idx;
}

}  // namespace

TemporalElection loadElection(const std::string& bytes) {
    json doc = parseDocument(bytes);
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    rejectUnknownKeys(doc, {"candidates", "voters", "rounds", "approvals"}, "document");
    for (const char* key : {"candidates", "voters", "rounds", "approvals"})
        if (!doc.contains(key)) throw ParseError(std::string(key) + ": missing");

    TemporalElection e;
    if (!doc["candidates"].is_array()) throw ParseError("candidates: expected an array");
    for (const auto& c : doc["candidates"]) {
        if (!c.is_string()) throw ParseError("candidates: entries must be strings");
        e.candidates.push_back(c.get<std::string>());
    }
    if (!doc["voters"].is_number_integer()) throw ParseError("voters: expected an integer");
    if (!doc["rounds"].is_number_integer()) throw ParseError("rounds: expected an integer");
    e.voters = doc["voters"].get<int>();
    e.rounds = doc["rounds"].get<int>();
    if (e.voters < 1) throw ParseError("voters: must be a positive integer");
    if (e.rounds < 1) throw ParseError("rounds: must be a positive integer");

    const json& rows = doc["approvals"];
    if (!rows.is_array()) throw ParseError("approvals: expected an array");
    if (static_cast<int>(rows.size()) != e.voters)
        throw ParseError("approvals: expected " + std::to_string(e.voters) + " voter rows, got " +
                         std::to_string(rows.size()));
    e.approvals.resize(e.voters);
    for (int i = 0; i < e.voters; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != e.rounds)
            throw ParseError("approvals: voter " + std::to_string(i + 1) + " must have " +
                             std::to_string(e.rounds) + " round cells");
        e.approvals[i].resize(e.rounds);
        for (int r = 0; r < e.rounds; ++r) {
            const json& cell = row[r];
            if (!cell.is_array())
                throw ParseError("approvals: voter " + std::to_string(i + 1) + " round " +
                                 std::to_string(r + 1) + " must be an array of names");
            std::vector<int>& out = e.approvals[i][r];
            for (const auto& name : cell) {
                if (!name.is_string())
                    throw ParseError("approvals: voter " + std::to_string(i + 1) + " round " +
                                     std::to_string(r + 1) + " has a non-string entry");
                int idx = candidateIndexOrThrow(
                    e, name.get<std::string>(),
                    "approvals[" + std::to_string(i + 1) + "][" + std::to_string(r + 1) + "]");
                out.push_back(idx);
            }
            std::sort(out.begin(), out.end());
            if (std::adjacent_find(out.begin(), out.end()) != out.end())
                throw ParseError("approvals: voter " + std::to_string(i + 1) + " round " +
                                 std::to_string(r + 1) + " repeats a candidate");
        }
    }
    e.validate();
    return e;
}

std::string saveElection(const TemporalElection& e) {
    json doc;
    doc["candidates"] = e.candidates;
    doc["voters"] = e.voters;
    doc["rounds"] = e.rounds;
    json rows = json::array();
    for (int i = 0; i < e.voters; ++i) {
        json row = json::array();
        for (int r = 0; r < e.rounds; ++r) {
            json cell = json::array();
            for (int c : e.approvals[i][r]) cell.push_back(e.candidates[c]);
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    doc["approvals"] = rows;
    return doc.dump(2) + "\n";
}

Outcome loadOutcome(const std::string& bytes, const TemporalElection& e) {
    json doc = parseDocument(bytes);
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    rejectUnknownKeys(doc, {"picks"}, "document");
    if (!doc.contains("picks") || !doc["picks"].is_array())
        throw ParseError("picks: missing or not an array");
    Outcome o;
    for (const auto& name : doc["picks"]) {
        if (!name.is_string()) throw ParseError("picks: entries must be candidate names");
        o.picks.push_back(candidateIndexOrThrow(e, name.get<std::string>(), "picks"));
    }
    validateOutcome(e, o);
    return o;
}

std::string saveOutcome(const TemporalElection& e, const Outcome& o) {
    json doc;
    json picks = json::array();
    for (int c : o.picks) picks.push_back(e.candidates[c]);
    doc["picks"] = picks;
    return doc.dump(2) + "\n";
}

Outcome parsePicks(const std::string& csv, const TemporalElection& e) {
    Outcome o;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ','))
        o.picks.push_back(candidateIndexOrThrow(e, name, "picks"));
    validateOutcome(e, o);
    return o;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void writeFile(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << bytes;
}

}  // namespace tempvote
