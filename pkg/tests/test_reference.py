import os
import tempfile
import unittest

from hyperfib.enumerator.models import ChiTable, ReferenceCell, ReferenceTable, TableCell
from hyperfib.enumerator.reference import (DEFAULT_REFERENCE_PATH, blowdowns, compare_table, compared_cells,
                                           construction_config, load_reference, verify_constructions)
from hyperfib.errors import ReferenceFixtureError

HEADER = 'g,delta,max_chi_or_empty,construction_surface,construction_l_or_degree,construction_singularity\n'


class TestReferenceFixture(unittest.TestCase):
    """ Test cases for the bundled reference fixture """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, content: str) -> str:
        path = os.path.join(self.tmp.name, 'reference.csv')
        with open(path, 'w', encoding='utf-8') as fixture:
            fixture.write(content)
        return path

    def test_load_default(self):
        reference = load_reference()
        self.assertEqual(len(reference.cells), 60)
        self.assertEqual(len([cell for cell in reference.cells if cell.max_chi is not None]), 38)
        self.assertEqual(reference.source, str(DEFAULT_REFERENCE_PATH))
        cell = reference.get(7, -7)
        self.assertEqual((cell.max_chi, cell.surface, cell.l_or_degree, cell.singularity), (42, 'F1', 14, '(3,3)'))
        self.assertIsNone(reference.get(6, -15).max_chi)
        self.assertIsNone(reference.get(11, -7))

    def test_comments_are_skipped(self):
        path = self.write('# provenance\n' + HEADER + '5,-7,61,F0,26,\n')
        reference = load_reference(path)
        self.assertEqual(len(reference.cells), 1)
        self.assertEqual(reference.source, path)

    def test_missing_file(self):
        with self.assertRaises(ReferenceFixtureError):
            load_reference(os.path.join(self.tmp.name, 'missing.csv'))

    def test_bad_header(self):
        with self.assertRaises(ReferenceFixtureError):
            load_reference(self.write('g,delta,chi\n5,-7,61\n'))

    def test_bad_value(self):
        with self.assertRaises(ReferenceFixtureError):
            load_reference(self.write(HEADER + '5,-7,sixty-one,F0,26,\n'))

    def test_duplicate_cell(self):
        with self.assertRaises(ReferenceFixtureError):
            load_reference(self.write(HEADER + '5,-7,61,F0,26,\n5,-7,61,F0,26,\n'))

    def test_compare(self):
        reference = load_reference(self.write(HEADER + '5,-7,61,F0,26,\n5,-8,55,F0,24,\n'))
        table = ChiTable(g_values=[5], delta_values=[-7, -8, -9],
                         cells=[TableCell(g=5, delta=-7, max_chi=61), TableCell(g=5, delta=-8, max_chi=56),
                                TableCell(g=5, delta=-9, max_chi=51)])
        differences = compare_table(table, reference)
        self.assertEqual(len(differences), 1)
        self.assertEqual((differences[0].g, differences[0].delta, differences[0].computed,
                          differences[0].reference), (5, -8, 56, 55))
        self.assertEqual(compared_cells(table, reference), 2)


class TestExistenceEntries(unittest.TestCase):
    """ every existence entry is a valid branch datum for its cell """

    def test_all_entries(self):
        checks = verify_constructions(load_reference())
        self.assertEqual(len(checks), 38)
        for check in checks:
            self.assertTrue(check.ok, (check.cell, check.chi, check.delta, check.violations, check.residual))

    def test_three_three_on_f1(self):
        config = construction_config(ReferenceCell(g=7, delta=-7, max_chi=42, surface='F1', l_or_degree=14,
                                                   singularity='(3,3)'))
        self.assertEqual((config.k, config.l, config.e, config.t), (16, 14, 1, 1))
        self.assertEqual(config.spectrum.r_list, (2, 4))

    def test_smooth_on_f2(self):
        """ F_2, l = 14 at (7, -8) needs one blow-down """
        config = construction_config(ReferenceCell(g=7, delta=-8, max_chi=43, surface='F2', l_or_degree=14))
        self.assertEqual((config.k, config.l, config.e, config.t), (16, 14, 2, 1))

    def test_plane_entries(self):
        config = construction_config(ReferenceCell(g=10, delta=-10, max_chi=46, surface='P2', l_or_degree=22))
        self.assertEqual((config.k, config.l, config.e, config.t), (22, 11, 1, 2))
        config = construction_config(ReferenceCell(g=8, delta=-11, max_chi=36, surface='P2', l_or_degree=20,
                                                   singularity='(3,3)'))
        self.assertEqual((config.k, config.l, config.t, config.spectrum.n4), (18, 11, 1, 1))

    def test_blowdowns(self):
        self.assertEqual(blowdowns(16, 14, 1, '(3,3)'), 1)
        self.assertEqual(blowdowns(16, 14, 1, '(4)'), 0)
        self.assertEqual(blowdowns(16, 14, 1, None), 0)
        self.assertEqual(blowdowns(16, 14, 2, None), 1)
        self.assertEqual(blowdowns(22, 11, 1, None), 2)

    def test_wrong_blowdowns_are_reported(self):
        """ F_1 instead of F_2 at (7, -8) keeps chi but loses the contracted curve """
        cell = ReferenceCell(g=7, delta=-8, max_chi=43, surface='F1', l_or_degree=14)
        checks = verify_constructions(ReferenceTable(source='tampered', cells=[cell]))

        self.assertEqual(len(checks), 1)
        self.assertEqual(checks[0].config.t, 0)
        self.assertEqual(checks[0].chi, 43)
        self.assertEqual(checks[0].delta, -9)
        self.assertFalse(checks[0].ok)

    def test_bad_entries(self):
        with self.assertRaises(ReferenceFixtureError):
            construction_config(ReferenceCell(g=6, delta=-15))
        with self.assertRaises(ReferenceFixtureError):
            construction_config(ReferenceCell(g=5, delta=-7, max_chi=61, surface='F9', l_or_degree=26))
        with self.assertRaises(ReferenceFixtureError):
            construction_config(ReferenceCell(g=5, delta=-7, max_chi=61, surface='P2', l_or_degree=22))
        with self.assertRaises(ReferenceFixtureError):
            construction_config(ReferenceCell(g=5, delta=-7, max_chi=61, surface='F0', l_or_degree=26,
                                              singularity='(x)'))


if __name__ == '__main__':
    unittest.main()
