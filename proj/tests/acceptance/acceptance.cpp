/*
   Copyright 2026 The prfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Runs `prfq paper-check --json` and prints one line per acceptance
// criterion. Criterion 10 is the exit status of the command itself.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: prfq_acceptance <path-to-prfq> [extra paper-check flags]\n";
        return 2;
    }
    std::string cmd = std::string("'") + argv[1] + "' paper-check --json --quiet";
    for (int i = 2; i < argc; ++i) cmd += std::string(" '") + argv[i] + "'";

    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot run " << cmd << "\n";
        return 2;
    }
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    json report;
    try {
        report = json::parse(out);
    } catch (const json::exception& e) {
        std::cerr << "unreadable paper-check output: " << e.what() << "\n";
        return 2;
    }

    bool all = true;
    for (int id = 1; id <= 9; ++id) {
        const json* found = nullptr;
        for (const auto& c : report["criteria"])
            if (c["id"] == id) found = &c;
        const bool pass = found && (*found)["passed"].get<bool>();
        all = all && pass;
        std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL",
                    found ? (*found)["title"].get<std::string>().c_str() : "(missing)");
        if (!found) continue;
        for (const auto& item : (*found)["items"])
            if (!item["passed"].get<bool>())
                std::printf("    failed: %s: %s\n", item["label"].get<std::string>().c_str(),
                            item["detail"].get<std::string>().c_str());
    }
    const bool schema_ok = report.value("schema", 0) == 1;
    const bool ten = code == 0 && schema_ok;
    std::printf("criterion 10: %s  paper-check exits 0 (exit code %d, schema %s)\n", ten ? "PASS" : "FAIL", code,
                schema_ok ? "1" : "missing");
    return all && ten ? 0 : 1;
}
