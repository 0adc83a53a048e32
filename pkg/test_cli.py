import json

import pytest

from main import main


@pytest.fixture
def table_file(tmp_path):
    def write(text, name='table.txt'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def test_validate_exit_codes(table_file, capsys):
    assert main(['validate', table_file("2\n0 0\n0 1\n")]) == 0
    assert 'order 2' in capsys.readouterr().out
    assert main(['validate', table_file("[[1, 0], [0, 0]]")]) == 1
    assert main(['validate', table_file("2\n0 0\n")]) == 2


def test_enumerate_prints_count(tmp_path, capsys):
    out = tmp_path / 'cache.txt'
    assert main(['enumerate', '--order', '2', '--dedup', 'none', '--out', str(out)]) == 0
    assert '8 semigroups of order 2' in capsys.readouterr().out
    assert out.read_text().startswith('semigroups v1 n=2 dedup=none')


def test_catalog_prints_table(capsys):
    assert main(['catalog', 'chain_semilattice', '2']) == 0
    assert capsys.readouterr().out == "2\n0 0\n0 1\n"
    assert main(['catalog', 'rectangular_band', '2']) == 2


def test_check_predicates(table_file, capsys):
    path = table_file("2\n0 0\n0 0\n")
    assert main(['check', 'regular', path]) == 0
    assert capsys.readouterr().out.strip() == 'false'
    assert main(['check', 'quasi_ideal', path, '--subset', '0']) == 0
    assert capsys.readouterr().out.strip() == 'true'
    assert main(['check', 'fuzzy_subsemigroup', path, '--fuzzy', '1; 0 1']) == 0
    assert capsys.readouterr().out.strip() == 'false'
    assert main(['check', 'left_ideal', path]) == 2


def test_correspond_single_and_sweep(table_file, capsys):
    path = table_file("2\n0 0\n1 1\n")
    assert main(['correspond', path, '--fuzzy', '2; 2 1']) == 0
    out = capsys.readouterr().out
    assert 'region: (0,0) (0,1) (0,2) (1,0) (1,1)' in out
    assert 'round trip: 2; 2 1' in out
    assert main(['correspond', path, '--chain', '2']) == 0


def test_decompose(table_file, capsys):
    assert main(['decompose', table_file("2\n0 0\n0 1\n")]) == 0
    out = capsys.readouterr().out
    assert 'block 0: [0] left_simple=True' in out
    assert 'block 1: [1] left_simple=True' in out


def test_verify_writes_report(tmp_path):
    out = tmp_path / 'suite.json'
    code = main(['verify', '--corpus', 'catalog:left_zero:2,catalog:null:2', '--chain', '2',
                 '--theorems', 'osreg,saito', '--out', str(out), '--no-cache'])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload['summary']['items'] == 4
    assert (tmp_path / 'suite.csv').exists()


def test_budget_flag_turns_sweeps_into_errors(capsys):
    assert main(['--budget', '4', 'verify', '--corpus', 'catalog:left_zero:2', '--theorems', 'osreg',
                 '--no-cache']) == 2


def test_budget_flag_after_the_subcommand(table_file, capsys):
    assert main(['verify', '--budget', '4', '--corpus', 'catalog:left_zero:2', '--theorems', 'osreg',
                 '--no-cache']) == 2
    assert main(['correspond', table_file("2\n0 0\n1 1\n"), '--budget', '4']) == 2
    assert main(['--budget', '4', 'correspond', table_file("2\n0 0\n1 1\n")]) == 2


def test_correspond_reports_non_subsemigroup(table_file, capsys):
    assert main(['correspond', table_file("2\n0 0\n0 0\n"), '--fuzzy', '1; 0 1']) == 0
    out = capsys.readouterr().out
    assert 's-conditions:' in out
    assert 'round trip: not a subsemigroup' in out
