"""
Unit tests for spreadsheet and PDF export.
"""
import unittest

from openpyxl import load_workbook

from arrangement_homotopy.report import build_report
from arrangement_homotopy.report_exporter import HEADER_COLOR, ReportExporter

from .test_report import analyzed


class TestReportExporter(unittest.TestCase):
    """Test cases for ReportExporter."""

    @classmethod
    def setUpClass(cls):
        """Build one hyperbolic report shared by the tests."""
        cls.report = build_report(analyzed("two_share_line", 6))

    def test_excel_sheets(self):
        """Test the sheets and header style of the workbook."""
        workbook = load_workbook(ReportExporter.to_excel(self.report))
        self.assertEqual(workbook.sheetnames, ["lattice", "betti", "homotopy", "certificate"])
        betti = workbook["betti"]
        self.assertEqual([c.value for c in betti[1]], ["degree", "betti"])
        self.assertEqual([c.value for c in betti[2]], [0, 1])
        self.assertTrue(betti["A1"].font.bold)
        self.assertTrue(betti["A1"].fill.fgColor.rgb.endswith(HEADER_COLOR))

    def test_pdf(self):
        """Test exporting a PDF."""
        data = ReportExporter.to_pdf(self.report).getvalue()
        self.assertTrue(data.startswith(b"%PDF"))

    def test_pdf_elliptic(self):
        """Reports without certificate rows still export."""
        data = ReportExporter.to_pdf(build_report(analyzed("one_subspace", 4))).getvalue()
        self.assertTrue(data.startswith(b"%PDF"))


if __name__ == '__main__':
    unittest.main()
