"""
Test module for the nctorus.tools.cli module.
"""

import json
import os
import tempfile

import pytest

from nctorus.tools.cli import build_parser, main
from nctorus.tools.export import load_constants


class TestCommandLine:
    """Test class for the nctorus command."""

    @pytest.fixture
    def output_file(self):
        """Create a temporary file to store the report."""
        fd, path = tempfile.mkstemp(suffix=".json")
        os.close(fd)
        yield path
        if os.path.exists(path):
            os.unlink(path)

    def test_parser_defaults(self):
        """Global flags default to the run configuration."""
        args = build_parser().parse_args(["verify", "index"])
        assert args.tol == 1e-12
        assert args.window == 50
        assert (args.tau_re, args.tau_im) == (0.0, -1.0)

    def test_cohomology(self, capsys):
        """E_{1,2} has H^0 of dimension 2 and Euler characteristic 2."""
        main(["cohomology", "1", "2"])
        report = json.loads(capsys.readouterr().out)
        assert (report["h0"], report["h1"], report["euler"]) == (2, 0, 2)
        assert report["object"]["g"].endswith(";2,1")

    def test_fourier(self, capsys):
        """The transform report carries the class and both checks."""
        main(["fourier", "1", "1"])
        report = json.loads(capsys.readouterr().out)
        assert report["kind"] == "bundle"
        assert report["k_class"] == [1, -1]
        assert report["automorphy"] is True
        assert report["nonsplit"] is True

    def test_equivalence(self, capsys):
        """No forbidden sign pattern is met on random pairs."""
        main(["--seed", "4", "equivalence", "-0.4", "0"])
        report = json.loads(capsys.readouterr().out)
        assert report["forbidden"] == 0
        assert report["seed"] == 4
        assert report["images"]

    def test_verify_to_file(self, output_file):
        """A passing suite writes its report and exits normally."""
        main(["--json", output_file, "verify", "identities"])
        with open(output_file, encoding="utf-8") as source:
            report = json.load(source)
        assert report["suite"] == "identities"
        assert {check["status"] for check in report["checks"]} == {"pass"}

    def test_constants_to_file(self, output_file):
        """--json on constants exports a loadable table."""
        main(["--json", output_file, "constants", "1,0;1,1", "1,0;1,1"])
        table = load_constants(output_file)
        assert table.shape == (1, 1, 2)

    def test_failures_exit_nonzero(self):
        """Library errors, bad flags and malformed labels end the process."""
        with pytest.raises(SystemExit) as excinfo:
            main(["constants", "2,1;-3,-1", "1,0;1,1"])
        assert excinfo.value.code == 1
        with pytest.raises(SystemExit) as excinfo:
            main(["--tau-im", "1", "cohomology", "1", "2"])
        assert excinfo.value.code == 1
        with pytest.raises(SystemExit):
            main(["constants", "1,2;3,4", "1,0;1,1"])

    def test_unconverged_sum_exits_nonzero(self):
        """A lattice sum without usable decay is reported, not raised."""
        with pytest.raises(SystemExit) as excinfo:
            main(["--tau-im", "-1e-9", "constants", "1,0;1,1", "1,0;1,1"])
        assert excinfo.value.code == 1
