import unittest
import json
import os
import tempfile
from blaschke.cli import main, parse_rings, parse_schedule, EXIT_OK, EXIT_USAGE, EXIT_APPROXIMATE


class CLITest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.identity = self._write("identity.json", {
            "type": "finite", "eta": [1, 0], "zeros": [[0, 0]]
        })
        self.finite = self._write("finite.json", {
            "type": "finite", "eta": [0, 1], "zeros": [[0.5, 0], [-0.2, 0.3]]
        })
        self.truncated = self._write("truncated.json", {
            "type": "sequence",
            "rule": {"kind": "radial_power", "c": 1.0, "p": 2.0, "direction": [1, 0]},
            "level": 8, "eta": [1, 0]
        })
        self.atomic = self._write("atomic.json", {
            "type": "atomic", "mass": 0.5, "atom": [1, 0]
        })

    def tearDown(self):
        self.tmp.cleanup()

    def _path(self, name):
        return os.path.join(self.tmp.name, name)

    def _write(self, name, data):
        path = self._path(name)
        with open(path, "w") as f:
            json.dump(data, f)
        return path

    def _run(self, args, name="out.json"):
        out = self._path(name)
        code = main(args + ["--out", out])
        if not os.path.exists(out):
            return code, None
        with open(out) as f:
            text = f.read()
        return code, text

    def test_parsers(self):
        self.assertEqual(parse_rings("0.35:32,0.7:32"), [(0.35, 32), (0.7, 32)])
        self.assertEqual(parse_rings(""), [])
        self.assertEqual(parse_schedule("0.5,0.9"), [0.5, 0.9])

    def test_eval(self):
        code, text = self._run(["eval", "--model", self.identity, "--z", "0.5"])
        self.assertEqual(code, EXIT_OK)
        record = json.loads(text)
        evaluation, = record["reports"]["evaluations"]
        self.assertEqual(evaluation["value"], [0.5, 0.0])
        code, text = self._run(["eval", "--model", self.finite, "--z", "0.5,0"])
        self.assertEqual(json.loads(text)["reports"]["evaluations"][0]["at_zero"], True)
        code, text = self._run([
            "eval", "--model", self.truncated, "--z", "0.3", "--tol-eval", "1e-6"
        ])
        evaluation, = json.loads(text)["reports"]["evaluations"]
        self.assertLessEqual(evaluation["err"], 1e-6)

    def test_certify(self):
        code, text = self._run(["certify", "--model", self.finite])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(text)["reports"]["verdict"], "certified")
        code, _ = self._run(["certify", "--model", self.truncated])
        self.assertEqual(code, EXIT_APPROXIMATE)
        code, _ = self._run(
            ["certify", "--model", self.finite, "--grid-rings", "0.35:8", "--format", "csv"],
            name="out.csv"
        )
        self.assertEqual(code, EXIT_OK)

    def test_malformed(self):
        path = self._path("bad.json")
        with open(path, "w") as f:
            f.write("{not json")
        code, _ = self._run(["certify", "--model", path])
        self.assertEqual(code, EXIT_USAGE)
        code, _ = self._run(["certify", "--model", self._path("missing.json")])
        self.assertEqual(code, EXIT_USAGE)
        unknown = self._write("unknown.json", {"type": "spiral"})
        code, _ = self._run(["eval", "--model", unknown, "--z", "0"])
        self.assertEqual(code, EXIT_USAGE)

    def test_probe(self):
        code, text = self._run(
            ["probe", "--model", self.finite, "--a", "0", "--format", "csv"], name="probe.csv"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith("a_re,a_im,singular_mass,verdict"))
        code, _ = self._run(["probe", "--model", self.finite])
        self.assertEqual(code, EXIT_USAGE)

    def test_criteria(self):
        code, text = self._run(["criteria", "--model", self.atomic])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(text)["reports"]
        self.assertEqual(report["verdict"], "not_blaschke")
        self.assertAlmostEqual(report["singular_mass"], 0.5, places=6)

    def test_theorem1_deterministic(self):
        args = ["theorem1", "--trials", "3", "--deg-b", "2", "--deg-c", "2", "--seed", "5"]
        code, first = self._run(args, name="det.json")
        self.assertEqual(code, EXIT_OK)
        _, second = self._run(args, name="det.json")
        self.assertEqual(first, second)
        _, first = self._run(args + ["--format", "csv"], name="det.csv")
        _, second = self._run(args + ["--format", "csv"], name="det.csv")
        self.assertEqual(first, second)
        record = json.loads(self._run(args + ["--timing"])[1])
        self.assertIn("wall_time", record)
        self.assertEqual(record["config"]["prng"], "PCG64")

    def test_case_check(self):
        code, text = self._run(["case-check", "IIa", "--trials", "2"])
        self.assertEqual(code, EXIT_OK)
        B = self._write("B.json", {"type": "finite", "eta": [1, 0], "zeros": [[0, 0], [0, 0]]})
        code, text = self._run(["case-check", "I", "--model-b", B, "--model-c", B, "--a", "0.0625"])
        self.assertEqual(code, EXIT_OK)
        self.assertLess(json.loads(text)["reports"]["matching_distance"], 1e-10)
        code, _ = self._run(["case-check", "IIa", "--model-b", B, "--model-c", B])
        self.assertEqual(code, EXIT_USAGE)
        code, _ = self._run(["case-check", "IIb"])
        self.assertEqual(code, EXIT_USAGE)

    def test_maximal(self):
        critical = self._write("critical.json", {"points": [[0, 0]]})
        code, text = self._run(["maximal", "--critical-set", critical])
        self.assertEqual(code, EXIT_OK)
        model = json.loads(text)["reports"]["model"]
        self.assertEqual(model["zeros"], [[0.0, 0.0], [0.0, 0.0]])
        empty = self._write("empty.json", {"points": []})
        code, text = self._run(["maximal", "--critical-set", empty])
        self.assertEqual(json.loads(text)["reports"]["model"]["zeros"], [[0.0, 0.0]])


if __name__ == "__main__":
    unittest.main()
