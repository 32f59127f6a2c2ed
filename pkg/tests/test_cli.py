import subprocess
import sys


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "shortcat.cli", *args],
                          capture_output=True, text=True, **kwargs)


def test_catalogue_validate_certify_construct(tmp_path):
    out = run_cli("catalogue", "z2", "--out", str(tmp_path))
    assert out.returncode == 0, out.stderr
    short = tmp_path / "z2.short-multi.txt"
    assert short.exists()

    out = run_cli("validate", str(short))
    assert out.returncode == 0
    assert "status PASS" in out.stdout

    out = run_cli("certify", str(short), "--no-witnesses")
    assert out.returncode == 0
    assert "flag left-representable = yes" in out.stdout
    assert "flag representable = yes" in out.stdout
    assert "witness" not in out.stdout

    out = run_cli("certify", str(short))
    assert "witness" in out.stdout

    built = tmp_path / "z2.k.skew-monoidal.txt"
    out = run_cli("construct", str(short), "--which", "k", "--out", str(built))
    assert out.returncode == 0
    text = built.read_text()
    assert "provenance construction = k" in text
    assert "provenance source = z2" in text
    out = run_cli("validate", str(built))
    assert out.returncode == 0


def test_roundtrip_command(tmp_path):
    run_cli("catalogue", "poset-skew-first", "--out", str(tmp_path))
    out = run_cli("roundtrip", str(tmp_path / "poset2-first.skew-monoidal.txt"))
    assert out.returncode == 0, out.stderr
    run_cli("catalogue", "z2", "--out", str(tmp_path))
    out = run_cli("roundtrip", str(tmp_path / "z2.sym.braiding.txt"))
    assert out.returncode == 0
    assert "braiding-roundtrip" in out.stdout


def test_mutant_files_fail_at_their_annotation(tmp_path):
    out = run_cli("catalogue", "mutants", "--out", str(tmp_path))
    assert out.returncode == 0
    files = sorted(tmp_path.glob("mutant-*.txt"))
    assert len(files) >= 50
    # spot-check a handful through the file path; the full suite runs in-memory
    for sample in files[::13]:
        text = sample.read_text()
        family = subjects = None
        for line in text.splitlines():
            if line.startswith("provenance expect-fail-family = "):
                family = line.split(" = ", 1)[1]
            if line.startswith("provenance expect-fail-subjects = "):
                subjects = line.split(" = ", 1)[1].replace("|", ",")
        assert family and subjects, sample.name
        out = run_cli("validate", str(sample))
        assert out.returncode == 1, sample.name
        assert f"fail {family} @ {subjects} :" in out.stdout, sample.name


def test_morphism_validation_needs_source_and_target(tmp_path):
    run_cli("catalogue", "z2", "--out", str(tmp_path))
    run_cli("catalogue", "klein-four", "--out", str(tmp_path))
    run_cli("catalogue", "morphisms", "--out", str(tmp_path))
    mor = tmp_path / "z2-into-klein.morphism.txt"
    out = run_cli("validate", str(mor))
    assert out.returncode == 2
    out = run_cli("validate", str(mor),
                  "--source", str(tmp_path / "z2.short-multi.txt"),
                  "--target", str(tmp_path / "klein.short-multi.txt"))
    assert out.returncode == 0, out.stderr


def test_reports_are_deterministic_across_jobs(tmp_path):
    run_cli("catalogue", "klein-four", "--out", str(tmp_path))
    target = tmp_path / "klein.skew.short-skew.txt"
    r1 = tmp_path / "r1.txt"
    r4 = tmp_path / "r4.txt"
    assert run_cli("validate", str(target), "--jobs", "1", "--report", str(r1)).returncode == 0
    assert run_cli("validate", str(target), "--jobs", "4", "--report", str(r4)).returncode == 0
    assert r1.read_bytes() == r4.read_bytes()


def test_report_dir_env(tmp_path):
    run_cli("catalogue", "terminal", "--out", str(tmp_path))
    env_dir = tmp_path / "reports"
    out = run_cli("validate", str(tmp_path / "terminal.short-multi.txt"),
                  "--report", "t.txt",
                  env={"SHORTCAT_REPORT_DIR": str(env_dir), "PATH": "/usr/bin:/bin"})
    assert out.returncode == 0, out.stderr
    assert (env_dir / "t.txt").exists()


def test_empty_tables_validate_vacuously(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text(
        "format = 1\nkind = short-multi\nname = d2-empty\nobjects = a b\n"
        "hom a a = 1_a\nhom b b = 1_b\nid a = 1_a\nid b = 1_b\n"
        "comp 1_a 1_a = 1_a\ncomp 1_b 1_b = 1_b\n")
    out = run_cli("validate", str(path))
    assert out.returncode == 0
    assert "status PASS" in out.stdout


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("format = 9\nkind = category\nname = x\nobjects = a\n")
    assert run_cli("validate", str(bad)).returncode == 2
    missing = tmp_path / "missing.txt"
    assert run_cli("validate", str(missing)).returncode == 2
    big = ("format = 1\nkind = category\nname = big\n"
           "objects = " + " ".join(f"o{i}" for i in range(9)) + "\n"
           + "".join(f"hom o{i} o{i} = f{i}\n" for i in range(9))
           + "".join(f"id o{i} = f{i}\n" for i in range(9))
           + "".join(f"comp f{i} f{i} = f{i}\n" for i in range(9)))
    toolarge = tmp_path / "big.txt"
    toolarge.write_text(big)
    assert run_cli("validate", str(toolarge)).returncode == 2
    assert run_cli("validate", str(toolarge), "--max-objects", "9").returncode == 0


def test_comm_monoid_generator(tmp_path):
    out = run_cli("catalogue", "comm-monoid", "--out", str(tmp_path),
                  "--elements", "0 1 2 3", "--unit", "0", "--monoid-name", "z4",
                  "--table", "0 1 2 3;1 2 3 0;2 3 0 1;3 0 1 2")
    assert out.returncode == 0, out.stderr
    out = run_cli("validate", str(tmp_path / "z4.short-multi.txt"))
    assert out.returncode == 0
    out = run_cli("roundtrip", str(tmp_path / "z4.mon.skew-monoidal.txt"))
    assert out.returncode == 0
    # a non-commutative table is refused
    out = run_cli("catalogue", "comm-monoid", "--out", str(tmp_path),
                  "--elements", "0 1", "--unit", "0", "--table", "0 1;0 1")
    assert out.returncode == 2
