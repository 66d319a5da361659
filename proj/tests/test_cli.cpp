#include "printers.hpp"

#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "arsite/dessin.hpp"
#include "arsite/points.hpp"

using namespace arsite;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ok(std::vector<std::string> args) {
  const Result r = run(std::move(args));
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  return r.out;
}

}  // namespace

TEST_CASE("worked examples") {
  CHECK(ok({"distance", "1:0", "1:1/2"}) == "4\n");
  CHECK(ok({"fiber", "--count", "12"}) == "24\n");
  CHECK(ok({"bp", "fiber", "12", "--count"}) == "24\n");
  CHECK(ok({"belyi", "bdk", "3", "1"}) == "-2*x^3+3*x^2\n");
  CHECK(ok({"by", "bdk", "4", "1"}) == "-3*x^4+4*x^3\n");
  CHECK(ok({"bp", "psi", "12"}) == "24\n");
  CHECK(ok({"neighbours", "1:0", "2"}) == "1/2:0\n1/2:1/2\n2:0\n");
  CHECK(ok({"cw", "normalize", "P[3,1]*P[2,0]"}) == "P[2,0]*P[3,2]\n");
  CHECK(ok({"cw", "word2class", "P[2,0]*P[3,2]"}) == "1/6:1/3\n");
  CHECK(ok({"cw", "class2word", "1/6:1/3"}) == "P[2,0]*P[3,2]\n");
  CHECK(ok({"cw", "delta", "P[2,0]*P[3,2]"}) == "6\n");
  CHECK(ok({"cw", "divide", "P[2,1]*P[2,0]", "P[2,0]"}) == "P[2,1]\n");
  CHECK(ok({"cw", "divide", "P[2,1]", "P[3,0]"}) == "none\n");
  CHECK(ok({"sn", "chain", "2,4,12"}) == "2^2*3\n");
  CHECK(ok({"sn", "chain", "2,4", "--period", "1"}) == "2^inf\n");
  CHECK(ok({"sn", "equiv", "2^inf*3", "2^inf"}) == "true\n");
  CHECK(ok({"sn", "divides", "9", "2^inf*3"}) == "false\n");
  CHECK(ok({"sn", "lcm", "2^inf", "3^2"}) == "2^inf*3^2\n");
  CHECK(ok({"sn", "open", "3^inf", "2"}) == "false\n");
  CHECK(ok({"ds", "passport", ok({"ds", "edk", "8", "3"})}) == "[(5,1,1,1),(4,1,1,1,1)]\n");
  CHECK(ok({"ds", "monodromy", ok({"ds", "edk", "3", "1"})}) == "6\n");
  CHECK(ok({"by", "check", "x^3-x"}) == "false\n");
  CHECK(ok({"by", "beta", "3*x^2-2*x^3"}) == "1/3:1/3 P[3,1]\n");
  CHECK(ok({"by", "free", "x^3", "3*x^2-2*x^3", "x^3-3*x^2+3*x"}) == "true\n");
  CHECK(ok({"by", "free", "x^2", "x^3", "--maxlen", "2"}) == "false\n");
  CHECK(ok({"bc", "cond5", "2", "3"}) == "{\"condition\":5,\"p\":2,\"q\":3,\"ok\":true,\"cells\":6}\n");
  CHECK(ok({"bc", "op", "P[2,1]", "1/3"}) == "2/3\n");
  CHECK(ok({"bc", "rho", "2", "1/3"}) == "1/6 2/3\n");
  CHECK(ok({"bc", "presheaf", "P[2,1]", "3"}) == "{\"level\":6,\"elements\":[\"1/2\",\"2/3\",\"5/6\"]}\n");
  CHECK(ok({"ar", "generic", "3*x^2-2*x^3", "--alpha", "1/2"}) == "true\n");
  CHECK(ok({"ar", "squarefree", "3*x^2-2*x^3", "--level", "2"}) == "true\n");
  CHECK(ok({"pt", "project", R"({"site":"C","entries":["P[2,0]","P[2,1]*P[2,0]"]})"}) ==
        "{\"entries\":[2,4],\"site\":\"A\"}\n");
  CHECK(ok({"pt", "equiv", R"({"site":"A","entries":[2,4,8]})", R"({"site":"A","entries":[4,8]})"}) == "true\n");
  CHECK(ok({"pt", "tail", R"({"site":"A","entries":[2,4]})", R"({"site":"A","entries":[3]})"}) == "true\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"distance", "1:0"}).code == 2);
  CHECK(run({"distance", "a:b", "1:0"}).code == 2);
  CHECK(run({"cw", "normalize", "P[2,1"}).code == 2);
  CHECK(run({"ds", "passport", "{"}).code == 2);
  CHECK(run({"ds", "passport", "@/nonexistent/file"}).code == 2);
  const Result domain = run({"by", "bdk", "1", "0"});
  CHECK(domain.code == 1);
  CHECK(domain.err.find("error:") == 0);
  CHECK(run({"bc", "cond5", "2", "2"}).code == 1);
  CHECK(run({"ds", "passport", R"({"n":2,"alpha":[0,1],"beta":[0,1],"frame_black":0,"frame_white":0})"}).code == 1);
  CHECK(run({"ar", "tree", "3*x^2-2*x^3", "--depth", "7"}).code == 1);
  CHECK(run({"bp", "neighbours", "1:0", "4"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output re-parses to equal values") {
  const std::string e = ok({"ds", "edk", "5", "2"});
  CHECK(FramedDessin::from_json(e) == e_dessin(5, 2));
  const std::string composite = ok({"ds", "compose", e, ok({"ds", "edk", "3", "1"})});
  CHECK(FramedDessin::from_json(composite) == compose(e_dessin(5, 2), e_dessin(3, 1)));
  CHECK(FramedDessin::from_json(ok({"ds", "involution", e})) == involution(e_dessin(5, 2)));
  const std::string word = ok({"cw", "--json", "normalize", "P[3,1]*P[2,0]"});
  CHECK(word == "[[2,0],[3,2]]\n");
  CHECK(ok({"cw", "normalize", word.substr(0, word.size() - 1)}) == "P[2,0]*P[3,2]\n");
  const std::string chain = R"({"site":"B","generators":["-2*x^3+3*x^2"],"entries":[[0],[0,0]],"period":1})";
  const std::string projected = ok({"pt", "project", chain});
  const std::string first_line = projected.substr(0, projected.find('\n'));
  CHECK(TruncatedChain::from_json(first_line) == TruncatedChain::arithmetic({3, 9}, 1));
  CHECK(TruncatedChain::from_json(first_line).to_json() == first_line);
  const auto tree = nlohmann::json::parse(ok({"ar", "tree", "3*x^2-2*x^3", "--depth", "2"}));
  CHECK(tree.at("degree") == 3);
  CHECK(tree.at("levels").size() == 3);
  CHECK(tree.at("levels").at(2).size() == 9);
  CHECK(nlohmann::json::parse(tree.dump()) == tree);
  const auto aut = nlohmann::json::parse(ok({"ds", "auto", ok({"ds", "edk", "4", "0"})}));
  CHECK(aut.at("order") == 4);
  CHECK(aut.at("cyclic") == true);
}

TEST_CASE("DOT outputs") {
  const std::string ball = ok({"ball-dot", "1:0", "--primes", "2", "--radius", "1"});
  CHECK(ball.starts_with("graph bigpicture {"));
  const std::string tree = ok({"ar", "dot", "3*x^2-2*x^3", "--depth", "1"});
  CHECK(tree.starts_with("digraph arboreal {"));
  CHECK(ok({"ds", "dot", ok({"ds", "edk", "3", "1"})}).find("label") != std::string::npos);
}

TEST_CASE("determinism") {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"--seed", "7", "cw", "normalize", "--random", "P[3,1]*P[2,0]*P[5,4]*P[2,1]"},
        std::vector<std::string>{"cw", "normalize", "--random", "P[3,1]*P[2,0]*P[5,4]*P[2,1]", "--seed", "9"},
        std::vector<std::string>{"bp", "fiber", "18", "--jobs", "4"},
        std::vector<std::string>{"ar", "tree", "3*x^2-2*x^3", "--depth", "3"},
        std::vector<std::string>{"ds", "auto", R"({"n":4,"alpha":[1,2,3,0],"beta":[0,1,2,3],"frame_black":0,"frame_white":0})"}}) {
    const std::string first = ok(cmd);
    CHECK(ok(cmd) == first);
  }
  // Random rewrite schedules do not change the normal form.
  CHECK(ok({"--seed", "1", "cw", "normalize", "--random", "P[3,1]*P[2,0]"}) == "P[2,0]*P[3,2]\n");
  CHECK(ok({"--seed", "2", "cw", "normalize", "--random", "P[3,1]*P[2,0]"}) == "P[2,0]*P[3,2]\n");
  CHECK(ok({"bp", "fiber", "18", "--jobs", "4"}) == ok({"bp", "fiber", "18"}));
}
