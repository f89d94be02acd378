import io
import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from orthologic_prover.bench import REPORT_COLUMNS
from orthologic_prover.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main, parse_range

PROJECT_ROOT = Path(__file__).parent.parent.parent.resolve()
CONFIG_FILE_PATH = f"{PROJECT_ROOT}/tests/integration/configs/config.yml"

BOOLEAN2_TEXT = "element bot\nelement top\nleq bot top\nneg bot top\n"


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name: str) -> str:
        return os.path.join(self.tmp.name, name)

    def run_cli(self, *argv: str):
        with patch("sys.stdout", new_callable=io.StringIO) as out, patch("sys.stderr", new_callable=io.StringIO) as err:
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()


class TestProve(CliTestCase):
    def test_provable(self):
        """Test the verdict and exit status of a valid formula."""
        for algo in ("bwf", "fwf", "diag"):
            with self.subTest(algo=algo):
                status, out, _ = self.run_cli("prove", "X | ~X", "--algo", algo)
                self.assertEqual(status, EXIT_OK)
                self.assertEqual(out, "provable\n")

    def test_unprovable(self):
        """Test that ⊥ is reported unprovable with exit status 1."""
        status, out, _ = self.run_cli("prove", "F")
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertEqual(out, "unprovable\n")

    def test_two_formulas(self):
        """Test deciding ⊢ X, ¬X and refusing it outside bwf."""
        status, out, _ = self.run_cli("prove", "X", "--right", "~X")
        self.assertEqual((status, out), (EXIT_OK, "provable\n"))
        status, _, err = self.run_cli("prove", "X", "--right", "~X", "--algo", "fwf")
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("only searched with bwf", err)

    def test_cross_check(self):
        """Test comparing the verdict with the bounded OL search."""
        status, out, err = self.run_cli("prove", "(X & Y) | ~X | ~Y", "--cross-check")
        self.assertEqual((status, out), (EXIT_OK, "provable\n"))
        self.assertIn("oracle: provable", err)
        status, _, err = self.run_cli("prove", "F", "--cross-check", "--oracle-budget", "50")
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertIn("oracle: unprovable", err)
        status, _, _ = self.run_cli("prove", "X", "--cross-check", "--oracle-budget", "0")
        self.assertEqual(status, EXIT_ERROR)

    def test_syntax_error(self):
        """Test that a malformed formula exits with status 2."""
        status, out, err = self.run_cli("prove", "X & & Y")
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("error:", err)


class TestProofDocuments(CliTestCase):
    def setUp(self):
        super().setUp()
        self.proof = self.path("proof.json")
        status, _, _ = self.run_cli("prove", "(X & Y) | ~X | ~Y", "--proof", self.proof)
        self.assertEqual(status, EXIT_OK)

    def test_check(self):
        """Test checking a proof written by prove."""
        status, out, _ = self.run_cli("check", self.proof)
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("OLf: ⊢ ⇑ "))

    def test_check_tampered(self):
        """Test that a proof with a changed conclusion is rejected."""
        with open(self.proof, encoding="utf-8") as fh:
            doc = json.load(fh)
        doc["conclusion"]["right"] = "Z"
        with open(self.proof, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        status, _, err = self.run_cli("check", self.proof)
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertIn("invalid proof: node root", err)

    def test_check_wrong_rule(self):
        """Test that a root labelled with another rule is rejected with its node path."""
        with open(self.proof, encoding="utf-8") as fh:
            doc = json.load(fh)
        doc["rule"] = "top_rr"
        with open(self.proof, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        status, _, err = self.run_cli("check", self.proof)
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertIn("node root", err)

    def test_check_unknown_rule(self):
        """Test that an unknown rule name deep in the tree is rejected with its node path."""
        with open(self.proof, encoding="utf-8") as fh:
            doc = json.load(fh)
        doc["premises"][0]["rule"] = "bogus_rule"
        with open(self.proof, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        status, out, err = self.run_cli("check", self.proof)
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertEqual(out, "")
        self.assertIn("invalid proof: node root.0: unknown rule bogus_rule", err)

    def test_check_truncated(self):
        """Test that a truncated document exits with status 2."""
        with open(self.proof, encoding="utf-8") as fh:
            text = fh.read()
        with open(self.proof, "w", encoding="utf-8") as fh:
            fh.write(text[: len(text) // 2])
        status, _, _ = self.run_cli("check", self.proof)
        self.assertEqual(status, EXIT_ERROR)

    def test_check_missing_file(self):
        """Test that an unreadable proof exits with status 2."""
        status, _, _ = self.run_cli("check", self.path("missing.json"))
        self.assertEqual(status, EXIT_ERROR)

    def test_translate(self):
        """Test translating to OL and on to OLf0."""
        ol_proof = self.path("ol.json")
        status, _, _ = self.run_cli("translate", self.proof, "--to", "OL", "--output", ol_proof)
        self.assertEqual(status, EXIT_OK)
        status, out, _ = self.run_cli("check", ol_proof)
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("OL: ⊢ "))
        status, out, _ = self.run_cli("translate", ol_proof, "--to", "olf0")
        self.assertEqual(status, EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(doc["calculus"], "OLf0")
        self.assertEqual(doc["conclusion"]["kind"], "rr")


class TestBench(CliTestCase):
    def test_bench_flags(self):
        """Test a benchmark run configured by flags."""
        report = self.path("report.csv")
        status, out, _ = self.run_cli("bench", "--family", "e1", "--family", "e2", "--algo", "bwf", "--output", report)
        self.assertEqual(status, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], ",".join(REPORT_COLUMNS))
        self.assertEqual([line.split(",")[:3] for line in lines[1:]], [["e1", "bwf", "unprovable"], ["e2", "bwf", "provable"]])
        self.assertTrue(os.path.exists(report))
        self.assertTrue(os.path.exists(self.path("report.rules.csv")))

    def test_bench_config(self):
        """Test a benchmark run configured by the YAML file."""
        with patch.dict(os.environ, {"BENCH_OUTPUT_DIR": self.tmp.name}):
            status, out, _ = self.run_cli("bench", "--config", CONFIG_FILE_PATH)
        self.assertEqual(status, EXIT_OK)
        cells = [line.split(",")[:3] for line in out.splitlines()[1:]]
        self.assertEqual(len(cells), 8)
        self.assertIn(["psi0", "diag", "unprovable"], cells)
        self.assertIn(["phi1", "bwf", "provable"], cells)
        self.assertTrue(os.path.exists(self.path("report.csv")))

    def test_bench_config_errors(self):
        """Test that unresolvable or malformed configuration files exit with status 2."""
        unset = self.path("unset.yml")
        with open(unset, "w", encoding="utf-8") as fh:
            fh.write("bench:\n  families:\n    - name: !ENV ${ORTHOLOGIC_UNSET_FAMILY}\n")
        with patch.dict(os.environ, {}, clear=True):
            status, out, err = self.run_cli("bench", "--config", unset)
        self.assertEqual((status, out), (EXIT_ERROR, ""))
        self.assertIn("ORTHOLOGIC_UNSET_FAMILY is not set", err)
        broken = self.path("broken.yml")
        with open(broken, "w", encoding="utf-8") as fh:
            fh.write("bench: [unclosed\n")
        status, _, err = self.run_cli("bench", "--config", broken)
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("error:", err)

    def test_parse_range(self):
        """Test index ranges."""
        self.assertEqual(parse_range("3"), [3])
        self.assertEqual(parse_range("0..3,7"), [0, 1, 2, 3, 7])


class TestRefute(CliTestCase):
    def test_countermodel(self):
        """Test that the hexagon is searched first."""
        status, out, _ = self.run_cli("refute", "X | Y")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "countermodel in hexagon: X=bot, Y=bot\n")

    def test_no_countermodel(self):
        """Test a valid formula."""
        status, out, _ = self.run_cli("refute", "X | ~X")
        self.assertEqual(status, EXIT_NEGATIVE)
        self.assertEqual(out, "no countermodel in the given lattices\n")

    def test_lattice_file(self):
        """Test a lattice read from a file."""
        lattice = self.path("b2.lattice")
        with open(lattice, "w", encoding="utf-8") as fh:
            fh.write(BOOLEAN2_TEXT)
        status, out, _ = self.run_cli("refute", "X | Y", "--lattice", lattice)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, f"countermodel in {lattice}: X=bot, Y=bot\n")
        status, _, _ = self.run_cli("refute", "X | Y", "--lattice", self.path("missing.lattice"))
        self.assertEqual(status, EXIT_ERROR)


class TestGen(CliTestCase):
    def test_family(self):
        """Test printing a family member."""
        status, out, _ = self.run_cli("gen", "--family", "phi", "--n", "0")
        self.assertEqual((status, out), (EXIT_OK, "X0 | ~X0\n"))

    def test_random(self):
        """Test printing random formulas and refusing an even size."""
        status, out, _ = self.run_cli("gen", "--random", "7", "--count", "3", "--vars", "2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(len(out.splitlines()), 3)
        status, _, _ = self.run_cli("gen", "--random", "4")
        self.assertEqual(status, EXIT_ERROR)


if __name__ == "__main__":
    unittest.main()
