"""
This file helps in creating the CSV reports
"""

import logging
import os

import pandas as pd

from doublepoints.core_validations import get_today_date

LOGGER = logging.getLogger(__name__)


class Report(object):
    """
    Prepares files for reporting
    """
    def __init__(self, report_name, directory='.'):
        """
        Constructor files
        :param report_name: prefix of every file, e.g. classify or repro
        :param directory: where the CSV files go
        """
        self.report_name = str(report_name) + '_' + get_today_date()
        self.directory = directory
        self.sheets = []

    def add_to_report(self, sheet):
        """
        Adds Sheet to report.
        :param sheet: Sheet
        :return:
        """
        self.sheets.append(sheet)

    def save_report(self):
        """
        Writes every sheet to <directory>/<report_name>_<sheet_name>.csv
        :return: list of written paths
        """
        paths = []
        if not self.sheets:
            return paths
        os.makedirs(self.directory, exist_ok=True)
        for sheet in self.sheets:
            path = os.path.join(self.directory, '%s_%s.csv' % (self.report_name, sheet.sheet_name))
            sheet.default_df.to_csv(path, index=sheet.keep_index, na_rep='N/A')
            paths.append(path)
        LOGGER.info('report written: %s', ', '.join(paths))
        return paths

    def render(self):
        """
        Human readable text of all sheets.
        """
        blocks = []
        for sheet in self.sheets:
            if sheet.default_df.empty:
                continue
            blocks.append('%s\n%s' % (sheet.sheet_name, sheet.default_df.to_string(index=sheet.keep_index)))
        return '\n\n'.join(blocks)


class Sheet(object):
    """
    Prepares Sheet to be added to the Report.
    """
    def __init__(self, sheet_name, df, keep_index=False):
        """
        :param sheet_name: name used in the file name
        :param df: pandas DataFrame
        :param keep_index: write the index column
        """
        self.sheet_name = sheet_name
        self.default_df = df
        self.keep_index = keep_index

    @classmethod
    def from_records(cls, sheet_name, records, keep_index=False):
        return cls(sheet_name, pd.DataFrame(list(records)), keep_index)

    def concat_to_sheet(self, df):
        """
        Appends dataframe
        :param df:
        :return:
        """
        self.default_df = pd.concat([self.default_df, df], ignore_index=not self.keep_index)
